#pragma once

#include <gmpxx.h>

#include <string>

namespace planebranch {

// Exact arithmetic everywhere: arbitrary-precision rationals with canonical
// representation (coprime numerator/denominator, positive denominator).
// mpq_class keeps this invariant through arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical rendering: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace planebranch
