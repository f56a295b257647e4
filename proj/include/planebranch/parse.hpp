#pragma once

#include <map>
#include <string>

#include "planebranch/bipoly.hpp"
#include "planebranch/rational.hpp"

namespace planebranch {

// "T^9 + T^10", "T^7 - 5/2*T^18", "3 + T". Duplicate exponents are an
// error rather than silently summed.
std::map<long, Rat> parse_series(const std::string& text);

// "X2^6 + X1^7 + X1^5*X2^2", "3/7*X1^4*X2^3". Repeated monomials sum.
BiPoly parse_poly(const std::string& text);

Rat parse_rat(const std::string& text);

}  // namespace planebranch
