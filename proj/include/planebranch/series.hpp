#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planebranch/rational.hpp"

namespace planebranch {

// Dense truncated power series over Q: coefficients of T^0..T^N, known
// modulo T^{N+1}. Immutable after construction; all operations return new
// values. An order beyond the precision window is reported as nullopt
// (OVER_PRECISION), not as an error.
class TruncSeries {
public:
    explicit TruncSeries(long precision) : coeffs_(precision + 1) {}

    TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

    static TruncSeries monomial(const Rat& coeff, long exponent, long precision);
    static TruncSeries from_terms(const std::map<long, Rat>& terms, long precision);

    long precision() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rat& coeff(long k) const { return coeffs_[k]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Least k with nonzero coefficient, nullopt when all stored
    // coefficients vanish (OVER_PRECISION).
    std::optional<long> order() const;

    bool is_zero() const { return !order().has_value(); }

    TruncSeries truncated(long new_precision) const;

    // Precision of sums/products is the min of the operands'.
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rat& scalar) const;
    TruncSeries operator-() const;

    // d/dT; precision drops by one. Errors with PRECISION_EXHAUSTED at N=0.
    TruncSeries derivative() const;

    // Multiplication by T^shift, same precision (top coefficients fall off).
    TruncSeries shifted(long shift) const;

    TruncSeries pow(long e) const;

    // Exact division: requires order(divisor) finite and <= order(*this)
    // (or *this identically zero in window). Result precision:
    // min(Na, Nb) - ord(divisor).
    TruncSeries dividedBy(const TruncSeries& divisor) const;

    bool operator==(const TruncSeries& o) const = default;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
};

}  // namespace planebranch
