#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planebranch/differentials.hpp"
#include "planebranch/spectrum.hpp"

namespace planebranch {

enum class RootSource { from_lambda, from_sminus1, from_table1 };

inline const char* root_source_name(RootSource s) {
    switch (s) {
        case RootSource::from_lambda: return "FROM_LAMBDA";
        case RootSource::from_sminus1: return "FROM_SMINUS1";
        case RootSource::from_table1: return "FROM_TABLE1";
    }
    return "?";
}

// Predicted roots of the reduced Bernstein polynomial, each in (-2, 0),
// with per-root provenance. When complete, the set is all mu roots; when
// not, each sigma in S-tilde contributes an unresolved pair
// {-sigma, -(sigma+1)}, one member of which is a root.
struct RootPrediction {
    std::map<Rat, RootSource> roots;
    bool complete = false;
    std::vector<std::pair<Rat, Rat>> undetermined;  // {-sigma, -(sigma+1)} pairs
    // Rationals claimed by more than one source (reported, never asserted away).
    std::vector<Rat> collisions;
};

// {-lambda/(v0 v1) : lambda in Lambda\Gamma} and {-(sigma+1) : sigma in
// S_{-1}}; complete iff G is empty. Only for two-generator semigroups.
RootPrediction predicted_roots(const Spectrum& sp, const LambdaSet& L);

// The branches whose G set is forced empty by (Gamma, lambda1).
struct GEmptyCase {
    enum Kind { quasihomogeneous, tail_family, four_six, none } kind = none;
    long s = 0;   // tail_family: lambda1 = (v0-1) v1 - s v0
    long v2 = 0;  // four_six: Gamma = <4, 6, v2>
};

GEmptyCase classify_G_empty(const NumSemigroup& S, std::optional<long> lambda1);

struct TableRow {
    std::set<long> lambdaMinusGamma;
    long tau = 0;
    std::set<Rat> roots;
};

// Closed-form invariants for the three G-empty families.
//  case quasihomogeneous: needs (v0, v1);
//  case tail_family:      needs (v0, v1, s);
//  case four_six:         needs v2 (odd, >= 13).
TableRow table1_row(GEmptyCase::Kind kind, long v0, long v1, long s, long v2);

// Bookkeeping for sum(S) - sum(E) with E = {-(rho+1)}: the value is
// exactly #(Lambda\Gamma) + (number of S-tilde members resolved as -sigma),
// hence lies in [#(Lambda\Gamma), #(Lambda\Gamma) + #G].
struct DesigReport {
    long nLambdaMinusGamma = 0;
    long nG = 0;
    std::optional<Rat> exact;  // only when the prediction is complete
    long lower = 0, upper = 0;
    bool ok = false;
};

DesigReport desig_check(const Spectrum& sp, const LambdaSet& L, const RootPrediction& pred);

// Root set for an analyzed branch: predicted_roots for two generators,
// the closed-form four_six row for <4,6,v2>, UNSUPPORTED_SEMIGROUP otherwise.
RootPrediction roots_for_branch(const LambdaSet& L);

}  // namespace planebranch
