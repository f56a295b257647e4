#pragma once

#include <vector>

#include "planebranch/rational.hpp"

namespace planebranch {

// Numerical semigroup of a plane branch: minimal generators
// v0 < v1 < ... < vg with the gcd chain e_i = gcd(e_{i-1}, v_i), the
// quotients n_i = e_{i-1}/e_i, the conductor and the gap set. Construction
// validates primitivity (e_g = 1), minimality and the plane-branch
// admissibility conditions n_i >= 2 and n_i v_i < v_{i+1}.
class NumSemigroup {
public:
    static NumSemigroup from_generators(const std::vector<long>& gens);
    static NumSemigroup from_char_exponents(const std::vector<long>& beta);

    const std::vector<long>& gens() const { return gens_; }
    // e[i] = gcd(v_0,...,v_i); e[0] = v_0, e[g] = 1.
    const std::vector<long>& e() const { return e_; }
    // n[i] = e_{i-1}/e_i for i >= 1; n[0] unused (0).
    const std::vector<long>& n() const { return n_; }

    long g() const { return static_cast<long>(gens_.size()) - 1; }
    long v(long i) const { return gens_[i]; }
    long multiplicity() const { return gens_[0]; }
    long conductor() const { return conductor_; }
    long milnor() const { return conductor_; }

    const std::vector<long>& gaps() const { return gaps_; }

    // Unique representation z = s0 v0 + sum_{i>=1} s_i v_i with
    // 0 <= s_i < n_i for i >= 1 and s0 in Z. s0 >= 0 iff z is a value.
    std::vector<long> represent(long z) const;

    bool contains(long z) const;

    // beta_0 = v0, beta_1 = v1, beta_{i+1} = v_{i+1} - n_i v_i + beta_i.
    std::vector<long> char_exponents() const;

    bool operator==(const NumSemigroup& o) const { return gens_ == o.gens_; }

private:
    NumSemigroup() = default;

    std::vector<long> gens_, e_, n_, gaps_;
    long conductor_ = 0;
};

}  // namespace planebranch
