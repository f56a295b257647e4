#include "planebranch/semigroup.hpp"

#include <numeric>
#include <sstream>

#include "planebranch/error.hpp"

namespace planebranch {

namespace {

std::string join(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// Reachability over a generator subset, used for the minimality check.
bool reachable(long target, const std::vector<long>& gens) {
    if (target < 0) return false;
    std::vector<char> hit(target + 1, 0);
    hit[0] = 1;
    for (long z = 1; z <= target; ++z)
        for (long g : gens)
            if (z >= g && hit[z - g]) { hit[z] = 1; break; }
    return hit[target];
}

}  // namespace

NumSemigroup NumSemigroup::from_generators(const std::vector<long>& gens) {
    if (gens.empty() || gens[0] < 2)
        throw error(errc::not_plane_branch, "need generators with v0 >= 2, got [" + join(gens) + "]");
    for (size_t i = 1; i < gens.size(); ++i)
        if (gens[i] <= gens[i - 1])
            throw error(errc::not_plane_branch, "generators must be strictly increasing: [" + join(gens) + "]");

    NumSemigroup S;
    S.gens_ = gens;
    long g = S.g();

    S.e_.resize(g + 1);
    S.n_.assign(g + 1, 0);
    S.e_[0] = gens[0];
    for (long i = 1; i <= g; ++i) {
        S.e_[i] = std::gcd(S.e_[i - 1], gens[i]);
        S.n_[i] = S.e_[i - 1] / S.e_[i];
    }
    if (S.e_[g] != 1)
        throw error(errc::not_primitive, "gcd of generators is " + std::to_string(S.e_[g]));

    for (long i = 1; i <= g; ++i) {
        std::vector<long> others(gens.begin(), gens.begin() + i);
        if (reachable(gens[i], others))
            throw error(errc::not_minimal,
                        "v_" + std::to_string(i) + " = " + std::to_string(gens[i]) +
                            " lies in the semigroup of the preceding generators");
    }
    for (long i = 1; i <= g; ++i)
        if (S.n_[i] < 2)
            throw error(errc::not_plane_branch, "n_" + std::to_string(i) + " = 1 for [" + join(gens) + "]");
    for (long i = 1; i < g; ++i)
        if (S.n_[i] * gens[i] >= gens[i + 1])
            throw error(errc::not_plane_branch,
                        "n_i v_i >= v_{i+1} at i = " + std::to_string(i) + " for [" + join(gens) + "]");

    long c = 1 - gens[0];
    for (long i = 1; i <= g; ++i) c += (S.n_[i] - 1) * gens[i];
    S.conductor_ = c;

    for (long z = 1; z < c; ++z)
        if (!S.contains(z)) S.gaps_.push_back(z);
    return S;
}

NumSemigroup NumSemigroup::from_char_exponents(const std::vector<long>& beta) {
    if (beta.empty() || beta[0] < 2)
        throw error(errc::not_plane_branch, "need characteristic exponents with beta0 >= 2");
    for (size_t i = 1; i < beta.size(); ++i)
        if (beta[i] <= beta[i - 1])
            throw error(errc::not_plane_branch, "characteristic exponents must be strictly increasing");

    std::vector<long> v(beta.size());
    v[0] = beta[0];
    if (beta.size() > 1) v[1] = beta[1];
    long e_prev = beta[0];
    for (size_t i = 1; i + 1 < beta.size(); ++i) {
        long e_i = std::gcd(e_prev, beta[i]);
        long n_i = e_prev / e_i;
        v[i + 1] = n_i * v[i] + beta[i + 1] - beta[i];
        e_prev = e_i;
    }
    return from_generators(v);
}

std::vector<long> NumSemigroup::represent(long z) const {
    long g = this->g();
    std::vector<long> s(g + 1, 0);
    long r = z;
    for (long i = g; i >= 1; --i) {
        long m = e_[i - 1];
        long si = 0;
        while (si < n_[i] && ((r - si * gens_[i]) % m + m) % m != 0) ++si;
        s[i] = si;
        r -= si * gens_[i];
    }
    s[0] = r / gens_[0];  // exact: r is a multiple of v0 here
    return s;
}

bool NumSemigroup::contains(long z) const {
    if (z < 0) return false;
    if (z >= conductor_) return true;
    return represent(z)[0] >= 0;
}

std::vector<long> NumSemigroup::char_exponents() const {
    long g = this->g();
    std::vector<long> beta(g + 1);
    beta[0] = gens_[0];
    if (g >= 1) beta[1] = gens_[1];
    for (long i = 1; i < g; ++i) beta[i + 1] = gens_[i + 1] - n_[i] * gens_[i] + beta[i];
    return beta;
}

}  // namespace planebranch
