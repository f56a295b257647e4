#include "planebranch/branch.hpp"

#include <numeric>

#include "planebranch/error.hpp"

namespace planebranch {

NumSemigroup semigroup_of(long v0, const std::map<long, Rat>& x2_terms) {
    if (x2_terms.empty() || x2_terms.begin()->second == 0)
        throw error(errc::not_plane_branch, "x2 must be a nonzero series");
    long v1 = x2_terms.begin()->first;
    if (v0 < 2 || v1 <= v0 || v1 % v0 == 0)
        throw error(errc::not_plane_branch,
                    "need v0 >= 2, v1 > v0 and v0 not dividing v1 (got v0=" + std::to_string(v0) +
                        ", v1=" + std::to_string(v1) + ")");

    std::vector<long> beta = {v0, v1};
    long e = std::gcd(v0, v1);
    while (e > 1) {
        long next = -1;
        for (const auto& [exp, c] : x2_terms) {
            if (c == 0) continue;
            if (exp % e != 0) { next = exp; break; }
        }
        if (next < 0)
            throw error(errc::not_primitive,
                        "support of x2 together with v0 has gcd " + std::to_string(e));
        beta.push_back(next);
        e = std::gcd(e, next);
    }
    return NumSemigroup::from_char_exponents(beta);
}

Parameterization::Parameterization(long v0, TruncSeries x2, NumSemigroup s)
    : v0_(v0), v1_(*x2.order()), x2_(std::move(x2)), semigroup_(std::move(s)) {}

Parameterization Parameterization::make(long v0, const std::map<long, Rat>& terms,
                                        std::optional<long> precision) {
    std::map<long, Rat> clean;
    for (const auto& [k, c] : terms)
        if (c != 0) clean[k] = c;

    NumSemigroup S = semigroup_of(v0, clean);
    long v1 = clean.begin()->first;
    long N = precision.value_or(S.conductor() + v1 + 1);
    if (N < v1) throw error(errc::precision_exhausted, "precision below v1");

    // Normalize the leading coefficient to 1 by rescaling the x2 coordinate.
    Rat lead = clean.begin()->second;
    TruncSeries x2(N);
    if (lead != 1) {
        std::map<long, Rat> scaled;
        for (const auto& [k, c] : clean) scaled[k] = c / lead;
        x2 = TruncSeries::from_terms(scaled, N);
    } else {
        x2 = TruncSeries::from_terms(clean, N);
    }
    return Parameterization(v0, std::move(x2), std::move(S));
}

std::optional<long> value(const Parameterization& p, const BiPoly& h) {
    return h.eval(p.x1(), p.x2()).order();
}

std::optional<long> value_form(const Parameterization& p, const BiPoly& A, const BiPoly& B) {
    TruncSeries x1 = p.x1();
    const TruncSeries& x2 = p.x2();
    TruncSeries pullback =
        A.eval(x1, x2).truncated(p.precision() - 1) * x1.derivative() +
        B.eval(x1, x2).truncated(p.precision() - 1) * x2.derivative();
    auto ord = pullback.order();
    if (!ord) return std::nullopt;
    return *ord + 1;
}

BranchEquation BranchEquation::make(long v0, long v1, const std::map<BiPoly::Key, Rat>& coeffs) {
    if (v0 < 2 || v1 <= v0 || std::gcd(v0, v1) != 1)
        throw error(errc::not_plane_branch,
                    "need 2 <= v0 < v1 coprime (got v0=" + std::to_string(v0) +
                        ", v1=" + std::to_string(v1) + ")");
    BranchEquation eq;
    eq.v0_ = v0;
    eq.v1_ = v1;
    for (const auto& [k, c] : coeffs) {
        if (c == 0) continue;
        auto [i, j] = k;
        if (!(i >= 1 && i < v1 - 1 && j >= 1 && j < v0 - 1 && i * v0 + j * v1 > v0 * v1))
            throw error(errc::not_short_form,
                        "term X1^" + std::to_string(i) + "*X2^" + std::to_string(j) +
                            " lies outside the admissible exponent region");
        eq.coeffs_[k] = c;
    }
    return eq;
}

BranchEquation BranchEquation::from_bipoly(const BiPoly& f) {
    long v0 = -1, v1 = -1;
    Rat c2, c1;
    std::map<BiPoly::Key, Rat> rest;
    for (const auto& [k, c] : f.terms()) {
        auto [i, j] = k;
        if (i == 0 && j > 0 && v0 < 0 && abs(c) == 1) { v0 = j; c2 = c; continue; }
        if (j == 0 && i > 0 && v1 < 0 && abs(c) == 1) { v1 = i; c1 = c; continue; }
        rest[k] = c;
    }
    if (v0 < 0 || v1 < 0)
        throw error(errc::not_short_form,
                    "equation must contain pure terms (+/-)X2^v0 and (+/-)X1^v1 with unit coefficients");

    // Canonicalize signs to X2^{v0} - X1^{v1}. X1 -> -X1 flips an odd
    // X1-power; X2 -> -X2 (with a global sign) covers the other parity.
    if (c2 == -1) {
        if (v0 % 2 == 0)
            throw error(errc::not_short_form, "cannot sign-normalize: -X2^v0 with v0 even");
        std::map<BiPoly::Key, Rat> flipped;
        for (const auto& [k, c] : rest) flipped[k] = (k.second % 2 == 0 ? -c : c);
        rest = std::move(flipped);
        c2 = 1;
        c1 = -c1;
    }
    if (c1 == 1) {
        if (v1 % 2 == 0)
            throw error(errc::not_short_form, "cannot sign-normalize: +X1^v1 with v1 even");
        std::map<BiPoly::Key, Rat> flipped;
        for (const auto& [k, c] : rest) flipped[k] = (k.first % 2 == 0 ? c : -c);
        rest = std::move(flipped);
        c1 = -1;
    }
    return make(v0, v1, rest);
}

BiPoly BranchEquation::poly() const {
    BiPoly f;
    f.set(0, v0_, Rat(1));
    f.set(v1_, 0, Rat(-1));
    for (const auto& [k, c] : coeffs_) f.set(k.first, k.second, c);
    return f;
}

Parameterization puiseux(const BranchEquation& eq, std::optional<long> targetN) {
    long v0 = eq.v0(), v1 = eq.v1();
    long mu = (v0 - 1) * (v1 - 1);
    long N = targetN.value_or(mu + v1 + 1);

    // Work at precision N + ord(f_{X2}(phi)) so each quotient is exact to
    // order N; ord(f_{X2}(phi)) = (v0-1) v1 for equations in this form.
    long d = (v0 - 1) * v1;
    long work = N + d;

    BiPoly f = eq.poly();
    BiPoly fx2 = f.derivative_x2();
    TruncSeries x1 = TruncSeries::monomial(Rat(1), v0, work);
    TruncSeries y = TruncSeries::monomial(Rat(1), v1, work);

    // Stop only when the residual vanishes through the whole work window:
    // residual order r pins y down modulo T^{r-d+1} only, so r must exceed
    // N + d before the truncation of y to N is the branch.
    std::optional<long> prev_ord = std::nullopt;
    for (;;) {
        TruncSeries residual = f.eval(x1, y);
        auto ord = residual.order();
        if (!ord) break;
        if (prev_ord && *ord <= *prev_ord)
            throw error(errc::no_convergence,
                        "residual order stalled at " + std::to_string(*ord));
        prev_ord = ord;
        TruncSeries deriv = fx2.eval(x1, y);
        std::vector<Rat> q = residual.dividedBy(deriv).coeffs();
        q.resize(work + 1);
        y = y - TruncSeries(std::move(q));
    }

    std::map<long, Rat> terms;
    for (long k = 0; k <= N; ++k)
        if (y.coeff(k) != 0) terms[k] = y.coeff(k);
    Parameterization p = Parameterization::make(v0, terms, N);

    // Postcondition: the truncated series still solves eq mod T^{N+1}.
    if (value(p, f).has_value())
        throw error(errc::no_convergence, "residual does not vanish to the requested order");
    return p;
}

BiPoly f1_of(const BranchEquation& eq) {
    BiPoly r;
    for (const auto& [k, c] : eq.coeffs()) {
        auto [i, j] = k;
        // i v0 + j v1 > v0 v1 on the admissible region, so w > 0 always.
        Rat w = Rat(i) / Rat(eq.v1()) + Rat(j) / Rat(eq.v0()) - 1;
        r.set(i, j, -w * c);
    }
    return r;
}

}  // namespace planebranch
