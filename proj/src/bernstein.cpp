#include "planebranch/bernstein.hpp"

#include <algorithm>

#include "planebranch/error.hpp"

namespace planebranch {

namespace {

void insert_root(RootPrediction& pred, const Rat& r, RootSource src) {
    auto [it, inserted] = pred.roots.emplace(r, src);
    if (!inserted && it->second != src) pred.collisions.push_back(r);
}

}  // namespace

RootPrediction predicted_roots(const Spectrum& sp, const LambdaSet& L) {
    if (L.gamma.g() != 1)
        throw error(errc::unsupported_semigroup,
                    "root prediction needs a two-generator semigroup");
    if (L.gamma.v(0) != sp.v0 || L.gamma.v(1) != sp.v1)
        throw error(errc::semigroup_mismatch, "spectrum does not match the lambda set");

    long prod = sp.v0 * sp.v1;
    SpectrumPartition part = partition(sp, L);

    RootPrediction pred;
    for (long lam : L.lambdaMinusGamma)
        insert_root(pred, make_rat(-lam, prod), RootSource::from_lambda);
    for (const Rat& s : part.sMinus1) insert_root(pred, -(s + 1), RootSource::from_sminus1);
    for (const Rat& s : part.sTilde) pred.undetermined.emplace_back(-s, -(s + 1));
    pred.complete = L.gSet.empty();
    return pred;
}

GEmptyCase classify_G_empty(const NumSemigroup& S, std::optional<long> lambda1) {
    GEmptyCase c;
    if (S.g() == 1) {
        long v0 = S.v(0), v1 = S.v(1);
        if (!lambda1) {
            c.kind = GEmptyCase::quasihomogeneous;
            return c;
        }
        long l1 = *lambda1;
        long rem = (v0 - 1) * v1 - l1;
        if (rem > 0 && rem % v0 == 0) {
            long s = rem / v0;
            if (1 <= s && s <= v1 / v0 + 1) {
                c.kind = GEmptyCase::tail_family;
                c.s = s;
                return c;
            }
        }
        return c;
    }
    if (S.g() == 2 && S.v(0) == 4 && S.v(1) == 6) {
        c.kind = GEmptyCase::four_six;
        c.v2 = S.v(2);
        return c;
    }
    return c;
}

TableRow table1_row(GEmptyCase::Kind kind, long v0, long v1, long s, long v2) {
    TableRow row;
    switch (kind) {
        case GEmptyCase::quasihomogeneous: {
            NumSemigroup S = NumSemigroup::from_generators({v0, v1});
            long prod = v0 * v1;
            row.tau = S.milnor();
            for (long d : S.gaps()) {
                row.roots.insert(-(make_rat(d, prod) + 1));
                row.roots.insert(-(make_rat(-d, prod) + 1));
            }
            return row;
        }
        case GEmptyCase::tail_family: {
            NumSemigroup S = NumSemigroup::from_generators({v0, v1});
            if (s < 1 || s > v1 / v0 + 1)
                throw error(errc::bad_case, "s out of range [1, floor(v1/v0)+1]");
            long prod = v0 * v1;
            long l1 = (v0 - 1) * v1 - s * v0;
            for (long j = 0; j < s; ++j) row.lambdaMinusGamma.insert(l1 + j * v0);
            row.tau = S.milnor() - s;
            // Negative-spectrum family over all gaps, positive-spectrum
            // family below lambda1, and the -sigma flips above it.
            for (long d : S.gaps()) {
                row.roots.insert(make_rat(d - prod, prod));
                if (d < l1) row.roots.insert(-(make_rat(d, prod) + 1));
            }
            for (long j = 1; j <= s; ++j)
                row.roots.insert(make_rat(-((v0 - 1) * v1 - j * v0), prod));
            return row;
        }
        case GEmptyCase::four_six: {
            if (v2 <= 12 || v2 % 2 == 0)
                throw error(errc::bad_case, "need odd v2 >= 13 for <4,6,v2>");
            row.lambdaMinusGamma = {v2 - 2, v2 + 2};
            row.tau = v2 + 1;
            for (long i : {5L, 7L, 11L, 13L}) row.roots.insert(make_rat(-i, 12));
            for (long j = 0; j < v2; ++j) {
                if (j == 1) continue;
                row.roots.insert(make_rat(-(v2 + 2 * (j - 1)), 2 * v2));
            }
            return row;
        }
        default:
            throw error(errc::bad_case, "no closed-form row for this branch");
    }
}

DesigReport desig_check(const Spectrum& sp, const LambdaSet& L, const RootPrediction& pred) {
    DesigReport rep;
    rep.nLambdaMinusGamma = static_cast<long>(L.lambdaMinusGamma.size());
    rep.nG = static_cast<long>(L.gSet.size());
    rep.lower = rep.nLambdaMinusGamma;
    rep.upper = rep.nLambdaMinusGamma + rep.nG;
    if (pred.complete) {
        Rat sum_sigma = 0;
        for (const Rat& s : sp.values) sum_sigma += s;
        Rat sum_eps = 0;
        for (const auto& [rho, src] : pred.roots) sum_eps += -(rho + 1);
        Rat v = sum_sigma - sum_eps;
        rep.exact = v;
        rep.ok = Rat(rep.lower) <= v && v <= Rat(rep.upper);
    } else {
        rep.ok = rep.lower <= rep.upper;
    }
    return rep;
}

RootPrediction roots_for_branch(const LambdaSet& L) {
    const NumSemigroup& S = L.gamma;
    if (S.g() == 1) return predicted_roots(spectrum(S.v(0), S.v(1)), L);
    GEmptyCase c = classify_G_empty(S, L.lambda1);
    if (c.kind == GEmptyCase::four_six) {
        TableRow row = table1_row(GEmptyCase::four_six, 4, 6, 0, c.v2);
        if (row.lambdaMinusGamma != L.lambdaMinusGamma || row.tau != L.tjurina)
            throw error(errc::semigroup_mismatch,
                        "computed lambda set disagrees with the <4,6,v2> closed form");
        RootPrediction pred;
        for (const Rat& r : row.roots) pred.roots.emplace(r, RootSource::from_table1);
        pred.complete = true;
        return pred;
    }
    throw error(errc::unsupported_semigroup,
                "no root description for semigroups with three or more generators"
                " outside <4,6,v2>");
}

}  // namespace planebranch
