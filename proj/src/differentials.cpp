#include "planebranch/differentials.hpp"

#include <algorithm>

#include "planebranch/error.hpp"

namespace planebranch {

namespace {

long leading_index(const std::vector<Int>& row) {
    for (long k = 0; k < static_cast<long>(row.size()); ++k)
        if (row[k] != 0) return k;
    return -1;
}

// Divide out the content to keep entry growth in check.
void reduce_content(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& x : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (Int& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// r <- p[k] * r - r[k] * p, the fraction-free elimination step at column k.
void eliminate(std::vector<Int>& r, const std::vector<Int>& p, long k) {
    Int a = p[k], b = r[k];
    for (long c = k; c < static_cast<long>(r.size()); ++c) r[c] = a * r[c] - b * p[c];
    reduce_content(r);
}

}  // namespace

std::set<long> echelon_pivots_serial(std::vector<std::vector<Int>> rows, long ncols) {
    std::vector<std::vector<Int>> pivot(ncols);
    std::set<long> pivots;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return leading_index(a) < leading_index(b);
    });
    for (auto& r : rows) {
        reduce_content(r);
        for (;;) {
            long k = leading_index(r);
            if (k < 0 || k >= ncols) break;
            if (pivot[k].empty()) {
                pivot[k] = std::move(r);
                pivots.insert(k);
                break;
            }
            eliminate(r, pivot[k], k);
        }
    }
    return pivots;
}

std::set<long> echelon_pivots_parallel(std::vector<std::vector<Int>> rows, long ncols) {
    std::set<long> pivots;
    for (auto& r : rows) reduce_content(r);

    // Column-stepped elimination: at each column, one row becomes the
    // pivot and the remaining rows with the same leading index are cleared
    // against it independently.
    std::vector<long> lead(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) lead[i] = leading_index(rows[i]);

    for (long col = 0; col < ncols; ++col) {
        long piv = -1;
        std::vector<long> competing;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (lead[i] != col) continue;
            if (piv < 0) piv = static_cast<long>(i);
            else competing.push_back(static_cast<long>(i));
        }
        if (piv < 0) continue;
        pivots.insert(col);
        const std::vector<Int>& p = rows[piv];
#pragma omp parallel for schedule(dynamic)
        for (long idx = 0; idx < static_cast<long>(competing.size()); ++idx) {
            long i = competing[idx];
            eliminate(rows[i], p, col);
            lead[i] = leading_index(rows[i]);
        }
    }
    return pivots;
}

std::vector<std::vector<Int>> lambda_generator_rows(const Parameterization& p) {
    const NumSemigroup& S = p.semigroup();
    long c = S.conductor();
    long v0 = p.v0(), v1 = p.v1();
    long ncols = c - 1;  // T-exponents 0..c-2, i.e. values 1..c-1

    TruncSeries x1 = p.x1().truncated(ncols - 1 < 0 ? 0 : ncols - 1);
    TruncSeries x2 = p.x2().truncated(ncols - 1 < 0 ? 0 : ncols - 1);
    TruncSeries d1 = p.x1().derivative().truncated(ncols - 1 < 0 ? 0 : ncols - 1);
    TruncSeries d2 = p.x2().derivative().truncated(ncols - 1 < 0 ? 0 : ncols - 1);

    std::vector<std::vector<Int>> rows;
    auto emit = [&](const TruncSeries& base, long vk) {
        // base = x2(phi)^b * phi_k'; shifting by a*v0 multiplies by x1^a.
        for (long b = 0;; ++b) {
            TruncSeries s = (b == 0) ? base : base * x2.pow(b);
            long init = b * v1 + vk - 1;
            if (init > ncols - 1) break;
            for (long a = 0; a * v0 + init <= ncols - 1; ++a) {
                TruncSeries shifted = s.shifted(a * v0);
                // Clear denominators for the fraction-free elimination.
                Int lcm = 1;
                for (long k = 0; k <= shifted.precision(); ++k)
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                            shifted.coeff(k).get_den_mpz_t());
                std::vector<Int> row(ncols);
                for (long k = 0; k < ncols && k <= shifted.precision(); ++k) {
                    const Rat& q = shifted.coeff(k);
                    row[k] = Int(q.get_num()) * (lcm / Int(q.get_den()));
                }
                rows.push_back(std::move(row));
            }
        }
    };
    if (ncols > 0) {
        emit(d1, v0);
        emit(d2, v1);
    }
    return rows;
}

LambdaSet lambda_set(const Parameterization& p, bool parallel) {
    const NumSemigroup& S = p.semigroup();
    long c = S.conductor();
    long v0 = p.v0(), v1 = p.v1();
    if (p.precision() < c + v1)
        throw error(errc::precision_exhausted,
                    "need precision >= conductor + v1 = " + std::to_string(c + v1) +
                        ", have " + std::to_string(p.precision()));

    auto rows = lambda_generator_rows(p);
    std::set<long> pivots = parallel ? echelon_pivots_parallel(std::move(rows), c - 1)
                                     : echelon_pivots_serial(std::move(rows), c - 1);

    LambdaSet L{S, {}, {}, {}, 0, {}, {}, 0};
    for (long k : pivots) L.small.insert(k + 1);

    for (long z : L.small)
        if (!S.contains(z)) L.lambdaMinusGamma.insert(z);
    if (!L.lambdaMinusGamma.empty()) {
        L.lambda1 = *L.lambdaMinusGamma.begin();
        L.lambda0 = *L.lambda1 - v0;
        for (long l = *L.lambda1 + 1; l < c; ++l)
            if (!L.small.count(l)) L.gSet.insert(l);
    }
    long last_gap = 0;
    for (long l = 1; l < c; ++l)
        if (!L.small.count(l)) last_gap = l;
    L.lambdaC = last_gap + 1;
    L.tjurina = S.milnor() - static_cast<long>(L.lambdaMinusGamma.size());
    return L;
}

std::set<long> g_set(const LambdaSet& L) {
    if (!L.lambda1)
        throw error(errc::lambda_empty, "G is undefined when Lambda \\ Gamma is empty");
    return L.gSet;
}

long tjurina_of(const LambdaSet& L) { return L.tjurina; }

Rat dim_lower_bound(const NumSemigroup& S) {
    long g = S.g();
    if (g <= 1) return Rat(0);
    long ng = S.n()[g];
    Rat inner = make_rat(-S.v(0), ng) + 1;
    for (long i = 1; i <= g - 1; ++i) inner += make_rat((S.n()[i] - 1) * S.v(i), ng);
    return make_rat(3 * ng - 2, 4) * inner;
}

}  // namespace planebranch
