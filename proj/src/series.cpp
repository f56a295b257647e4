#include "planebranch/series.hpp"

#include <algorithm>
#include <sstream>

#include "planebranch/error.hpp"

namespace planebranch {

TruncSeries TruncSeries::monomial(const Rat& coeff, long exponent, long precision) {
    TruncSeries s(precision);
    if (exponent <= precision) s.coeffs_[exponent] = coeff;
    return s;
}

TruncSeries TruncSeries::from_terms(const std::map<long, Rat>& terms, long precision) {
    TruncSeries s(precision);
    for (const auto& [k, c] : terms)
        if (k <= precision) s.coeffs_[k] = c;
    return s;
}

std::optional<long> TruncSeries::order() const {
    for (long k = 0; k < static_cast<long>(coeffs_.size()); ++k)
        if (coeffs_[k] != 0) return k;
    return std::nullopt;
}

TruncSeries TruncSeries::truncated(long new_precision) const {
    if (new_precision >= precision()) return *this;
    std::vector<Rat> c(coeffs_.begin(), coeffs_.begin() + new_precision + 1);
    return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    long n = std::min(precision(), o.precision());
    TruncSeries r(n);
    for (long k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    long n = std::min(precision(), o.precision());
    TruncSeries r(n);
    for (long k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    long n = std::min(precision(), o.precision());
    TruncSeries r(n);
    for (long p = 0; p <= n; ++p) {
        if (coeffs_[p] == 0) continue;
        for (long q = 0; p + q <= n; ++q) {
            if (o.coeffs_[q] == 0) continue;
            r.coeffs_[p + q] += coeffs_[p] * o.coeffs_[q];
        }
    }
    return r;
}

TruncSeries TruncSeries::operator*(const Rat& scalar) const {
    TruncSeries r(precision());
    for (long k = 0; k <= precision(); ++k) r.coeffs_[k] = coeffs_[k] * scalar;
    return r;
}

TruncSeries TruncSeries::operator-() const { return *this * Rat(-1); }

TruncSeries TruncSeries::derivative() const {
    if (precision() == 0)
        throw error(errc::precision_exhausted, "cannot differentiate a series of precision 0");
    TruncSeries r(precision() - 1);
    for (long k = 0; k < precision(); ++k) r.coeffs_[k] = Rat(k + 1) * coeffs_[k + 1];
    return r;
}

TruncSeries TruncSeries::shifted(long shift) const {
    TruncSeries r(precision());
    for (long k = 0; k + shift <= precision(); ++k) r.coeffs_[k + shift] = coeffs_[k];
    return r;
}

TruncSeries TruncSeries::pow(long e) const {
    TruncSeries acc = monomial(Rat(1), 0, precision());
    TruncSeries base = *this;
    for (long bit = e; bit > 0; bit >>= 1) {
        if (bit & 1) acc = acc * base;
        if (bit > 1) base = base * base;
    }
    return acc;
}

TruncSeries TruncSeries::dividedBy(const TruncSeries& divisor) const {
    auto dord = divisor.order();
    if (!dord)
        throw error(errc::precision_exhausted, "division by a series that vanishes in window");
    long m = *dord;
    long n = std::min(precision(), divisor.precision()) - m;
    auto nord = order();
    if (nord && *nord < m)
        throw error(errc::no_convergence, "quotient would not be a power series");

    // divisor = T^m * u with u a unit; invert u by the triangular recursion
    // inv_k = -(sum_{j=1..k} u_j inv_{k-j}) / u_0.
    std::vector<Rat> u(n + 1), inv(n + 1);
    for (long k = 0; k <= n; ++k) u[k] = divisor.coeff(m + k);
    inv[0] = Rat(1) / u[0];
    for (long k = 1; k <= n; ++k) {
        Rat s = 0;
        for (long j = 1; j <= k; ++j) s += u[j] * inv[k - j];
        inv[k] = -s / u[0];
    }
    TruncSeries num(n);
    for (long k = 0; k <= n && m + k <= precision(); ++k) num.coeffs_[k] = coeffs_[m + k];
    return num * TruncSeries(std::move(inv));
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k <= precision(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << (coeffs_[k] > 0 ? " + " : " - ");
        else if (coeffs_[k] < 0) os << "-";
        Rat a = abs(coeffs_[k]);
        if (k == 0) os << rat_str(a);
        else {
            if (a != 1) os << rat_str(a) << "*";
            os << "T";
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(T^" << precision() + 1 << ")";
    return os.str();
}

}  // namespace planebranch
