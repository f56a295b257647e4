#include "planebranch/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace planebranch {

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::operator*(const Rat& scalar) const {
    BiPoly r;
    if (scalar == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c * scalar;
    return r;
}

BiPoly BiPoly::derivative_x1() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * Rat(k.first);
    return r;
}

BiPoly BiPoly::derivative_x2() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * Rat(k.second);
    return r;
}

TruncSeries BiPoly::eval(const TruncSeries& x1, const TruncSeries& x2) const {
    long n = std::min(x1.precision(), x2.precision());
    if (terms_.empty()) return TruncSeries(n);

    // Group coefficients by X2-degree: p = sum_j (sum_i a_ij x1^i) x2^j.
    std::map<long, std::map<long, Rat>> by_j;
    long max_i = 0;
    for (const auto& [k, c] : terms_) {
        by_j[k.second][k.first] = c;
        max_i = std::max(max_i, k.first);
    }

    std::unordered_map<long, TruncSeries> x1_pow;
    auto power_of_x1 = [&](long i) -> const TruncSeries& {
        auto it = x1_pow.find(i);
        if (it == x1_pow.end()) it = x1_pow.emplace(i, x1.truncated(n).pow(i)).first;
        return it->second;
    };

    auto row_poly = [&](const std::map<long, Rat>& row) {
        TruncSeries acc(n);
        for (const auto& [i, c] : row) acc = acc + power_of_x1(i) * c;
        return acc;
    };

    long jmax = by_j.rbegin()->first;
    TruncSeries acc(n);
    TruncSeries x2t = x2.truncated(n);
    for (long j = jmax; j >= 0; --j) {
        if (j != jmax) acc = acc * x2t;
        auto it = by_j.find(j);
        if (it != by_j.end()) acc = acc + row_poly(it->second);
    }
    return acc;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        bool has_var = k.first > 0 || k.second > 0;
        if (a != 1 || !has_var) {
            os << rat_str(a);
            if (has_var) os << "*";
        }
        if (k.first > 0) {
            os << "X1";
            if (k.first > 1) os << "^" << k.first;
            if (k.second > 0) os << "*";
        }
        if (k.second > 0) {
            os << "X2";
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

}  // namespace planebranch
