#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsep/entropy.hpp"
#include "qsep/qstate.hpp"
#include "qsep/separability.hpp"
#include "qsep/teleport.hpp"

namespace qsep {

/// Input-schema violation; pointer() is the JSON-pointer path of the bad
/// element.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string pointer, const std::string& message)
        : std::runtime_error(pointer + ": " + message),
          pointer_(std::move(pointer)) {}

    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

/// Parses the state schema: an object with exactly one of "matrix" (4x4 of
/// [re, im] pairs, row-major), "hs" ({"r", "s", "t"}), "bell_diag" ({"p"}),
/// "werner" ({"p"}). Throws SchemaError on shape problems and Error on
/// invalid physical content.
DensityMatrix parse_state(const nlohmann::json& j);

struct AnalysisReport {
    nlohmann::json input_echo;
    HSParams hs;
    bool is_t_state;
    std::vector<double> bell_spectrum;  // empty unless T-state
    Vec3 canonical_diag;
    SeparabilityReport separability;
    std::vector<AlphaEntropyVerdict> entropy_scan;
    TeleportReport teleport;
};

AnalysisReport analyze(const DensityMatrix& rho, std::span<const double> alphas,
                       nlohmann::json input_echo = {});

nlohmann::json to_json(const HSParams& hs);
nlohmann::json to_json(const SeparabilityReport& rep);
nlohmann::json to_json(const AlphaEntropyVerdict& v);
nlohmann::json to_json(const TeleportReport& rep);
nlohmann::json to_json(const SimulationResult& res);
nlohmann::json to_json(const AnalysisReport& rep);

/// Fig.-1 geometry: tetrahedron and octahedron vertices, facets, and the
/// Werner segment from the singlet vertex to the origin.
nlohmann::json geometry_json();

}  // namespace qsep
