#pragma once

#include <optional>
#include <set>
#include <vector>

#include "planebranch/branch.hpp"
#include "planebranch/rational.hpp"
#include "planebranch/semigroup.hpp"

namespace planebranch {

// Value set of 1-forms along the branch, restricted to [1, c-1]; every
// integer >= c is a value. Derived invariants follow the identities
// lambda0 = lambda1 - v0 and tjurina = milnor - #(Lambda \ Gamma).
struct LambdaSet {
    NumSemigroup gamma;
    std::set<long> small;             // Lambda intersect [1, c-1]
    std::optional<long> lambda1;      // min(Lambda \ Gamma), nullopt = infinity
    std::optional<long> lambda0;      // lambda1 - v0
    long lambdaC = 0;                 // min{l in Lambda : l + N subset Lambda}
    std::set<long> lambdaMinusGamma;  // Lambda \ Gamma
    std::set<long> gSet;              // {l > lambda1 : l not in Lambda}
    long tjurina = 0;

    bool contains(long z) const {
        if (z >= gamma.conductor()) return z >= 1;
        return small.count(z) > 0;
    }
};

// Exact row echelon over Z of an integer matrix, returning the set of
// pivot columns. The pivot-column set of a row space is canonical, so the
// serial and parallel paths must agree exactly; the serial one is the
// reference kept for testing, the parallel one steps column by column and
// eliminates the competing rows of each column with OpenMP.
std::set<long> echelon_pivots_serial(std::vector<std::vector<Int>> rows, long ncols);
std::set<long> echelon_pivots_parallel(std::vector<std::vector<Int>> rows, long ncols);

// Compute Lambda by order saturation: rows are the coefficient vectors
// (T-exponents 0..c-2) of the pullbacks of x1^a x2^b dx_k over all (a,b,k)
// with a v0 + b v1 + v_k <= c-1; the achievable pullback orders are
// exactly the pivot columns of that row space, and value = order + 1.
// Requires precision >= c + v1.
LambdaSet lambda_set(const Parameterization& p, bool parallel = true);

// Generator rows as used by lambda_set, exposed for the test oracle.
std::vector<std::vector<Int>> lambda_generator_rows(const Parameterization& p);

// {l : lambda1 < l < c, l not in Lambda}. Errors when lambda1 is infinite.
std::set<long> g_set(const LambdaSet& L);

long tjurina_of(const LambdaSet& L);

// (3 n_g - 2)/4 * (sum_{i=1}^{g-1} (n_i - 1) v_i/n_g - v0/n_g + 1);
// 0 for g = 1 (degenerate single-generator shape, by convention).
Rat dim_lower_bound(const NumSemigroup& S);

}  // namespace planebranch
