#pragma once

#include <optional>
#include <string>

#include "planebranch/bernstein.hpp"
#include "planebranch/branch.hpp"
#include "planebranch/differentials.hpp"
#include "planebranch/spectrum.hpp"

#include <json.hpp>

namespace planebranch {

// Full analysis of one branch. Deterministic to serialize: sorted sets,
// canonical "p/q" rendering for rationals.
struct AnalysisReport {
    std::string input_echo;
    Parameterization param;
    LambdaSet lambda;
    std::optional<Spectrum> spec;             // only for two-generator semigroups
    std::optional<SpectrumPartition> part;    // idem
    std::optional<RootPrediction> roots;      // absent when unsupported
    std::string roots_error;                  // reason when absent
    Rat dimLowerBound;
    long precision_used = 0;
};

AnalysisReport analyze(const Parameterization& p, std::string input_echo);

nlohmann::ordered_json report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

}  // namespace planebranch
