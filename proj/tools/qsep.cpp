#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsep/entropy.hpp"
#include "qsep/report.hpp"
#include "qsep/sampling.hpp"
#include "qsep/separability.hpp"
#include "qsep/teleport.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDisagreement = 3;

std::vector<double> parse_alphas(const std::string& spec) {
    std::vector<double> alphas;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "inf" || item == "INF")
            alphas.push_back(qsep::kAlphaInf);
        else
            alphas.push_back(std::stod(item));
    }
    return alphas;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::ios_base::failure("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

struct SurveySample {
    qsep::BellSpectrum spectrum;
    double p_max;
    double l1;
    bool separable;
    bool useful;
    bool alpha2_violated;
    bool alpha_inf_violated;
};

SurveySample survey_one(qsep::SeededGenerator& gen) {
    SurveySample s;
    s.spectrum = qsep::uniform_bell_spectrum(gen);
    s.p_max = *std::max_element(s.spectrum.p.begin(), s.spectrum.p.end());
    const qsep::Vec3 t = qsep::t_from_bell_spectrum(s.spectrum);
    s.l1 = std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]);
    s.separable = qsep::in_octahedron(t);
    s.useful = s.l1 > 1.0 + qsep::kUsefulTol;  // N = l1 for diagonal T
    s.alpha2_violated = !qsep::tstate_inequality(s.spectrum, 2.0);
    s.alpha_inf_violated = !qsep::tstate_inequality(s.spectrum, qsep::kAlphaInf);
    return s;
}

int cmd_analyze(const std::string& statefile, const std::string& alphas_spec,
                const std::string& out_path) {
    json input;
    try {
        input = load_json(statefile);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    try {
        const qsep::DensityMatrix rho = qsep::parse_state(input);
        const std::vector<double> alphas = parse_alphas(alphas_spec);
        const qsep::AnalysisReport rep = qsep::analyze(rho, alphas, input);
        // A T-state whose teleport and separability verdicts drift apart
        // would mean a broken criterion chain.
        if (rep.is_t_state &&
            rep.teleport.useful !=
                (rep.separability.verdict == qsep::Verdict::INSEPARABLE)) {
            std::cerr << "error: internal criterion disagreement\n";
            return kExitDisagreement;
        }
        emit(qsep::to_json(rep), out_path);
        return kExitOk;
    } catch (const qsep::SchemaError& e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const qsep::Error& e) {
        std::cerr << "invalid state [" << qsep::to_string(e.code())
                  << "]: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_survey(std::uint64_t n, std::uint64_t seed, const std::string& out_path,
               const std::string& format) {
    if (n == 0) {
        std::cerr << "invalid count: n must be positive\n";
        return kExitInvalidInput;
    }
    qsep::SeededGenerator gen(seed);
    std::uint64_t separable = 0, useful = 0, a2_violating = 0, ainf_violating = 0;
    std::uint64_t disagreements = 0;

    std::ofstream csv;
    const bool write_csv = format == "csv" && !out_path.empty();
    if (write_csv) {
        csv.open(out_path);
        if (!csv) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitIo;
        }
        csv << "p0,p1,p2,p3,p_max,l1,separable,useful,alpha2_violated,"
               "alpha_inf_violated\n";
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        const SurveySample s = survey_one(gen);
        separable += s.separable;
        useful += s.useful;
        a2_violating += s.alpha2_violated;
        ainf_violating += s.alpha_inf_violated;
        // Props 4-7: all these must coincide on T-states.
        const bool spectral = s.p_max <= 0.5 + qsep::kGeomTol;
        if (s.separable != spectral || s.separable == s.useful ||
            s.separable == s.alpha_inf_violated)
            ++disagreements;
        if (write_csv) {
            csv << s.spectrum.p[0] << ',' << s.spectrum.p[1] << ','
                << s.spectrum.p[2] << ',' << s.spectrum.p[3] << ',' << s.p_max
                << ',' << s.l1 << ',' << s.separable << ',' << s.useful << ','
                << s.alpha2_violated << ',' << s.alpha_inf_violated << '\n';
        }
    }

    const double dn = static_cast<double>(n);
    json summary = {
        {"n", n},
        {"seed", seed},
        {"separable_fraction", separable / dn},
        {"useful_fraction", useful / dn},
        {"alpha2_violating_fraction", a2_violating / dn},
        {"alpha_inf_violating_fraction", ainf_violating / dn},
        {"disagreements", disagreements}};
    emit(summary, write_csv ? "" : out_path);
    return disagreements == 0 ? kExitOk : kExitDisagreement;
}

int cmd_geometry(const std::string& out_path) {
    try {
        emit(qsep::geometry_json(), out_path);
        return kExitOk;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_teleport_sim(const std::string& statefile, bool monte_carlo,
                     std::uint64_t n, std::uint64_t seed,
                     const std::string& out_path) {
    json input;
    try {
        input = load_json(statefile);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    try {
        const qsep::DensityMatrix rho = qsep::parse_state(input);
        const qsep::SimulationResult res =
            monte_carlo
                ? qsep::simulate_standard(rho, qsep::Averaging::MONTE_CARLO, n, seed)
                : qsep::simulate_standard(rho, qsep::Averaging::EXACT_DESIGN);
        json j = {{"input", input},
                  {"simulation", qsep::to_json(res)},
                  {"diagnostics", qsep::to_json(qsep::diagnostics(rho))},
                  {"classical_bound", qsep::kClassicalFidelityBound}};
        emit(j, out_path);
        return kExitOk;
    } catch (const qsep::SchemaError& e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const qsep::Error& e) {
        std::cerr << "invalid input [" << qsep::to_string(e.code())
                  << "]: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit mixed-state separability and teleportation toolkit"};
    app.require_subcommand(1);

    std::string statefile, out_path;
    std::string alphas = "1,1.5,2,5,10,50,inf";
    std::string format = "json";
    std::uint64_t seed = 42;
    std::uint64_t n = 0;
    bool monte_carlo = false;

    auto* analyze = app.add_subcommand("analyze", "Full analysis report for one state");
    analyze->add_option("statefile", statefile, "JSON state file")->required();
    analyze->add_option("--alphas", alphas, "comma list of alpha values (inf allowed)");
    analyze->add_option("--seed", seed, "random seed");
    analyze->add_option("--out", out_path, "output path (default: stdout)");

    auto* survey = app.add_subcommand("survey", "Random Bell-spectrum ensemble survey");
    survey->add_option("--n", n, "number of samples")->required();
    survey->add_option("--seed", seed, "random seed");
    survey->add_option("--out", out_path, "output path");
    survey->add_option("--format", format, "json|csv (csv writes per-sample rows)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* geometry = app.add_subcommand("geometry", "Tetrahedron/octahedron mesh export");
    geometry->add_option("--out", out_path, "output path (default: stdout)");

    auto* tsim = app.add_subcommand("teleport-sim", "Standard-scheme teleportation simulation");
    tsim->add_option("statefile", statefile, "JSON state file")->required();
    tsim->add_flag("--monte-carlo", monte_carlo, "Bloch-sphere sampling instead of the exact design");
    tsim->add_option("--n", n, "Monte-Carlo sample count");
    tsim->add_option("--seed", seed, "random seed");
    tsim->add_option("--out", out_path, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return cmd_analyze(statefile, alphas, out_path);
    if (survey->parsed()) return cmd_survey(n, seed, out_path, format);
    if (geometry->parsed()) return cmd_geometry(out_path);
    if (tsim->parsed()) return cmd_teleport_sim(statefile, monte_carlo, n, seed, out_path);
    return kExitOk;
}
