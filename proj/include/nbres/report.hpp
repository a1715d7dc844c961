#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "nbres/graph.hpp"
#include "nbres/pairing_formula.hpp"
#include "nbres/spectra.hpp"
#include "nbres/tree_cover.hpp"

namespace nbres {

using Json = nlohmann::ordered_json;

struct AnalysisConfig {
    double tol = 1e-8;
    double tol_cluster = 1e-8;
    int n_max = 12;
    std::uint64_t seed = 0;
    int depth = 0;       // 0 = skip tree-cover checks
    int samples = 5;     // random eigenspace combinations per cluster
    int bass_samples = 20;
};

struct AnalysisOutcome {
    Json report;
    bool pass = false;
};

/// Runs spectra -> pairings -> pairing-formula verification (and the
/// tree-cover checks when cfg.depth > 0) and assembles the JSON report.
AnalysisOutcome analyze(const RegularGraph& g, const std::string& source,
                        const AnalysisConfig& cfg);

/// Random complex combination of a basis, deterministic in the seed.
ResonantState sample_state(Orientation orientation, Complex z,
                           const std::vector<ComplexVector>& basis, std::uint64_t seed);

/// Canonical serialization: fixed field order, floats with 17 significant
/// digits. Byte-identical for identical inputs.
std::string dump_canonical(const Json& j);

// CSV exports of the resonance and theorem tables
std::string resonances_csv(const Json& report);
std::string theorem_csv(const Json& report);

} // namespace nbres
