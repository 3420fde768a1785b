#include "qsep/report.hpp"

#include <cmath>

#include "qsep/local_frame.hpp"

namespace qsep {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& pointer, const std::string& msg) {
    if (!cond) throw SchemaError(pointer, msg);
}

double number_at(const json& j, const std::string& pointer) {
    require(j.is_number(), pointer, "expected a number");
    return j.get<double>();
}

Vec3 vec3_at(const json& j, const std::string& pointer) {
    require(j.is_array() && j.size() == 3, pointer,
            "expected an array of 3 numbers");
    Vec3 v;
    for (int i = 0; i < 3; ++i)
        v[i] = number_at(j[i], pointer + "/" + std::to_string(i));
    return v;
}

DensityMatrix parse_matrix(const json& j) {
    require(j.is_array() && j.size() == 4, "/matrix",
            "expected a 4x4 array of [re, im] pairs");
    CMat4 m;
    for (int i = 0; i < 4; ++i) {
        const std::string row_ptr = "/matrix/" + std::to_string(i);
        require(j[i].is_array() && j[i].size() == 4, row_ptr,
                "expected a row of 4 entries");
        for (int k = 0; k < 4; ++k) {
            const std::string ptr = row_ptr + "/" + std::to_string(k);
            const json& e = j[i][k];
            require(e.is_array() && e.size() == 2, ptr,
                    "expected an [re, im] pair");
            m(i, k) = cplx{number_at(e[0], ptr + "/0"), number_at(e[1], ptr + "/1")};
        }
    }
    return DensityMatrix::from_matrix(m);
}

DensityMatrix parse_hs(const json& j) {
    require(j.is_object(), "/hs", "expected an object with r, s, t");
    require(j.contains("r") && j.contains("s") && j.contains("t"), "/hs",
            "expected fields r, s, t");
    HSParams hs;
    hs.r = vec3_at(j["r"], "/hs/r");
    hs.s = vec3_at(j["s"], "/hs/s");
    require(j["t"].is_array() && j["t"].size() == 3, "/hs/t",
            "expected a 3x3 array");
    for (int i = 0; i < 3; ++i) {
        const Vec3 row = vec3_at(j["t"][i], "/hs/t/" + std::to_string(i));
        for (int k = 0; k < 3; ++k) hs.t(i, k) = row[k];
    }
    return from_hs(hs, Tolerances{});
}

DensityMatrix parse_bell_diag(const json& j) {
    require(j.is_object() && j.contains("p"), "/bell_diag",
            "expected an object with p");
    require(j["p"].is_array() && j["p"].size() == 4, "/bell_diag/p",
            "expected an array of 4 probabilities");
    BellSpectrum p;
    for (int i = 0; i < 4; ++i)
        p.p[i] = number_at(j["p"][i], "/bell_diag/p/" + std::to_string(i));
    return bell_diagonal(p);
}

}  // namespace

DensityMatrix parse_state(const json& j) {
    require(j.is_object(), "", "state must be a JSON object");
    int keys = j.contains("matrix") + j.contains("hs") + j.contains("bell_diag") +
               j.contains("werner");
    require(keys == 1, "",
            "state must contain exactly one of matrix, hs, bell_diag, werner");
    if (j.contains("matrix")) return parse_matrix(j["matrix"]);
    if (j.contains("hs")) return parse_hs(j["hs"]);
    if (j.contains("bell_diag")) return parse_bell_diag(j["bell_diag"]);
    require(j["werner"].is_object() && j["werner"].contains("p"), "/werner",
            "expected an object with p");
    return werner(number_at(j["werner"]["p"], "/werner/p"));
}

AnalysisReport analyze(const DensityMatrix& rho, std::span<const double> alphas,
                       json input_echo) {
    AnalysisReport rep;
    rep.input_echo = std::move(input_echo);
    rep.hs = to_hs(rho);
    rep.is_t_state = std::max(norm(rep.hs.r), norm(rep.hs.s)) <= kTStateTol;
    const CanonicalForm canon = canonicalize(rho);
    rep.canonical_diag = canon.diag;
    if (rep.is_t_state) {
        // A T-state's eigenvalues are its Bell weights in the canonical frame;
        // report them in descending order.
        const Vec4 p = spectrum(rho);
        rep.bell_spectrum.assign(p.begin(), p.end());
    }
    rep.separability = classify(rho);
    rep.entropy_scan = violation_scan(rho, alphas);
    rep.teleport = diagnostics(rho);
    return rep;
}

namespace {

json alpha_to_json(double alpha) {
    if (std::isinf(alpha)) return "inf";
    return alpha;
}

}  // namespace

json to_json(const HSParams& hs) {
    json t = json::array();
    for (int i = 0; i < 3; ++i)
        t.push_back({hs.t(i, 0), hs.t(i, 1), hs.t(i, 2)});
    return {{"r", hs.r}, {"s", hs.s}, {"t", t}};
}

json to_json(const SeparabilityReport& rep) {
    return {{"is_t_state", rep.is_t_state},
            {"in_tetrahedron", rep.in_tetrahedron},
            {"l1_norm", rep.l1_norm},
            {"in_octahedron", rep.in_octahedron},
            {"max_eigenvalue", rep.max_eigenvalue},
            {"flip_overlaps", rep.flip_overlaps},
            {"verdict", to_string(rep.verdict)}};
}

json to_json(const AlphaEntropyVerdict& v) {
    return {{"alpha", alpha_to_json(v.alpha)},
            {"s_total", v.s_total},
            {"s_sub1", v.s_sub1},
            {"s_sub2", v.s_sub2},
            {"conditional_1given2", v.conditional_1given2},
            {"conditional_2given1", v.conditional_2given1},
            {"satisfied", v.satisfied}};
}

json to_json(const TeleportReport& rep) {
    json j = {{"n_value", rep.n},
              {"useful", rep.useful},
              {"f_max", rep.f_max},
              {"f_formula", rep.f_formula}};
    j["fully_entangled_fraction"] =
        rep.fully_entangled_fraction ? json(*rep.fully_entangled_fraction)
                                     : json(nullptr);
    j["purifiable"] = rep.purifiable ? json(*rep.purifiable) : json(nullptr);
    return j;
}

json to_json(const SimulationResult& res) {
    return {{"fidelity", res.fidelity},
            {"method",
             res.method == Averaging::EXACT_DESIGN ? "EXACT_DESIGN" : "MONTE_CARLO"},
            {"samples", res.samples},
            {"std_error", res.std_error}};
}

json to_json(const AnalysisReport& rep) {
    json j;
    j["input"] = rep.input_echo;
    j["hs_params"] = to_json(rep.hs);
    j["is_t_state"] = rep.is_t_state;
    if (rep.is_t_state)
        j["bell_spectrum"] = rep.bell_spectrum;
    j["canonical_diag"] = rep.canonical_diag;
    j["separability"] = to_json(rep.separability);
    json scan = json::array();
    for (const auto& v : rep.entropy_scan) scan.push_back(to_json(v));
    j["entropy_scan"] = scan;
    j["teleport"] = to_json(rep.teleport);
    return j;
}

json geometry_json() {
    json j;
    j["tetrahedron"] = {
        {"vertices",
         {{"A", {-1, -1, -1}}, {"B", {1, 1, -1}}, {"C", {1, -1, 1}},
          {"D", {-1, 1, 1}}}},
        {"facets", {{"A", "B", "C"}, {"A", "B", "D"}, {"A", "C", "D"},
                    {"B", "C", "D"}}}};
    json oct_vertices = json::array();
    json oct_facets = json::array();
    for (int axis = 0; axis < 3; ++axis)
        for (int sign : {1, -1}) {
            Vec3 v{};
            v[axis] = sign;
            oct_vertices.push_back(v);
        }
    // Vertex indices: 2*axis + (sign < 0); one facet per octant.
    for (int sx : {0, 1})
        for (int sy : {0, 1})
            for (int sz : {0, 1})
                oct_facets.push_back({0 + sx, 2 + sy, 4 + sz});
    j["octahedron"] = {{"vertices", oct_vertices}, {"facets", oct_facets}};
    j["werner_segment"] = {{"from", {-1, -1, -1}}, {"to", {0, 0, 0}},
                           {"labels", {"A", "E"}}};
    return j;
}

}  // namespace qsep
