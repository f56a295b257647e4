#pragma once

// Independent reference implementations used to cross-check the library.
// Deliberately naive: boolean DP for semigroup membership, plain rational
// Gaussian elimination for pivot columns.

#include <set>
#include <vector>

#include "planebranch/rational.hpp"

namespace oracles {

using planebranch::Int;
using planebranch::Rat;

inline std::vector<char> reachable(const std::vector<long>& gens, long limit) {
    std::vector<char> in(limit + 1, 0);
    in[0] = 1;
    for (long z = 1; z <= limit; ++z)
        for (long g : gens)
            if (z >= g && in[z - g]) { in[z] = 1; break; }
    return in;
}

inline std::set<long> pivots_mpq(const std::vector<std::vector<Int>>& irows, long ncols) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(irows.size());
    for (const auto& r : irows) {
        std::vector<Rat> q(r.size());
        for (size_t k = 0; k < r.size(); ++k) q[k] = Rat(r[k]);
        rows.push_back(std::move(q));
    }
    std::set<long> piv;
    size_t next = 0;
    for (long col = 0; col < ncols && next < rows.size(); ++col) {
        size_t sel = next;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[next], rows[sel]);
        piv.insert(col);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) continue;
            Rat fac = rows[r][col] / rows[next][col];
            for (long k = col; k < ncols; ++k) rows[r][k] -= fac * rows[next][k];
        }
        ++next;
    }
    return piv;
}

}  // namespace oracles
