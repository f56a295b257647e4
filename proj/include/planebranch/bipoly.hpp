#pragma once

#include <map>
#include <string>
#include <utility>

#include "planebranch/rational.hpp"
#include "planebranch/series.hpp"

namespace planebranch {

// Sparse bivariate polynomial over Q in X1, X2. Zero coefficients are
// never stored.
class BiPoly {
public:
    using Key = std::pair<long, long>;  // (i, j) for X1^i X2^j

    BiPoly() = default;

    static BiPoly monomial(const Rat& coeff, long i, long j) {
        BiPoly p;
        p.set(i, j, coeff);
        return p;
    }

    void set(long i, long j, const Rat& coeff) {
        if (coeff == 0) terms_.erase({i, j});
        else terms_[{i, j}] = coeff;
    }

    void add_term(long i, long j, const Rat& coeff) {
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            if (coeff != 0) terms_[{i, j}] = coeff;
            return;
        }
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }

    Rat coeff(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& scalar) const;

    BiPoly derivative_x1() const;
    BiPoly derivative_x2() const;

    // Exact substitution truncated to min precision of x1, x2. Horner in
    // X2 with cached powers of x1.
    TruncSeries eval(const TruncSeries& x1, const TruncSeries& x2) const;

    bool operator==(const BiPoly& o) const = default;

    std::string str() const;

private:
    std::map<Key, Rat> terms_;
};

}  // namespace planebranch
