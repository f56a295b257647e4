#pragma once

#include <map>
#include <optional>

#include "planebranch/bipoly.hpp"
#include "planebranch/semigroup.hpp"
#include "planebranch/series.hpp"

namespace planebranch {

// A plane branch given by the parameterization (T^{v0}, x2(T)) with
// ord x2 = v1, v0 < v1, v0 not dividing v1, and leading coefficient of x2
// equal to 1 (enforced at construction by rescaling the x2 coordinate,
// which leaves all valuations unchanged). The value semigroup is derived
// eagerly from the exponent support of x2.
class Parameterization {
public:
    // terms: exponent -> coefficient of x2. precision: series window; when
    // absent, defaults to conductor + v1 + 1.
    static Parameterization make(long v0, const std::map<long, Rat>& terms,
                                 std::optional<long> precision = std::nullopt);

    long v0() const { return v0_; }
    long v1() const { return v1_; }
    long precision() const { return x2_.precision(); }

    TruncSeries x1() const { return TruncSeries::monomial(Rat(1), v0_, precision()); }
    const TruncSeries& x2() const { return x2_; }

    const NumSemigroup& semigroup() const { return semigroup_; }

private:
    Parameterization(long v0, TruncSeries x2, NumSemigroup s);

    long v0_, v1_;
    TruncSeries x2_;
    NumSemigroup semigroup_;
};

// Characteristic exponents out of the support of x2 via the gcd chain,
// converted to semigroup generators.
NumSemigroup semigroup_of(long v0, const std::map<long, Rat>& x2_terms);

// ord_T h(phi(T)); nullopt when h(phi) vanishes within the window (h is
// then likely in the defining ideal).
std::optional<long> value(const Parameterization& p, const BiPoly& h);

// Value of the 1-form A dx1 + B dx2: ord_T(A(phi) phi1' + B(phi) phi2') + 1.
std::optional<long> value_form(const Parameterization& p, const BiPoly& A, const BiPoly& B);

// Semiquasihomogeneous equation X2^{v0} - X1^{v1} + sum_{Theta} a_ij X1^i X2^j
// with Theta = {1 <= i < v1-1, 1 <= j < v0-1, i v0 + j v1 > v0 v1}.
class BranchEquation {
public:
    static BranchEquation make(long v0, long v1, const std::map<BiPoly::Key, Rat>& coeffs);

    // Accepts any polynomial of the shape c2 X2^{v0} + c1 X1^{v1} + tail
    // with c2, c1 in {1,-1}; sign-normalizes by X1 -> -X1 or X2 -> -X2 so
    // the stored form is the canonical X2^{v0} - X1^{v1} + tail. Rejects
    // tail support outside Theta with NOT_SHORT_FORM.
    static BranchEquation from_bipoly(const BiPoly& f);

    long v0() const { return v0_; }
    long v1() const { return v1_; }
    const std::map<BiPoly::Key, Rat>& coeffs() const { return coeffs_; }

    BiPoly poly() const;

    bool quasihomogeneous() const { return coeffs_.empty(); }

private:
    long v0_ = 0, v1_ = 0;
    std::map<BiPoly::Key, Rat> coeffs_;
};

// Newton iteration for the branch of eq through (T^{v0}, T^{v1} + ...):
// y <- y - f(T^{v0}, y) / f_{X2}(T^{v0}, y), doubling residual order per
// step. The result satisfies eq(T^{v0}, y) = 0 mod T^{targetN+1}; the
// residual order is re-checked after the iteration.
Parameterization puiseux(const BranchEquation& eq, std::optional<long> targetN = std::nullopt);

// f1 = f - (1/v1) X1 f_{X1} - (1/v0) X2 f_{X2}
//    = -sum_Theta (i/v1 + j/v0 - 1) a_ij X1^i X2^j.
BiPoly f1_of(const BranchEquation& eq);

}  // namespace planebranch
