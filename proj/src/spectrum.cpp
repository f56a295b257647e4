#include "planebranch/spectrum.hpp"

#include <algorithm>
#include <numeric>

#include "planebranch/error.hpp"

namespace planebranch {

namespace {

void check_coprime(long v0, long v1) {
    if (!(2 <= v0 && v0 < v1 && std::gcd(v0, v1) == 1))
        throw error(errc::not_coprime,
                    "need 2 <= v0 < v1 coprime, got (" + std::to_string(v0) + "," +
                        std::to_string(v1) + ")");
}

}  // namespace

Spectrum spectrum(long v0, long v1) {
    check_coprime(v0, v1);
    NumSemigroup S = NumSemigroup::from_generators({v0, v1});
    Spectrum sp{v0, v1, {}};
    for (long d : S.gaps()) {
        sp.values.push_back(make_rat(-d, v0 * v1));
        sp.values.push_back(make_rat(d, v0 * v1));
    }
    std::sort(sp.values.begin(), sp.values.end());
    return sp;
}

Spectrum spectrum_grid(long v0, long v1) {
    check_coprime(v0, v1);
    Spectrum sp{v0, v1, {}};
    for (long i = 0; i < v1 - 1; ++i)
        for (long j = 0; j < v0 - 1; ++j)
            sp.values.push_back(make_rat((i + 1) * v0 + (j + 1) * v1 - v0 * v1, v0 * v1));
    std::sort(sp.values.begin(), sp.values.end());
    return sp;
}

Rat newton_order(const BiPoly& h, long v0, long v1) {
    if (h.is_zero()) throw error(errc::bad_case, "Newton order of the zero polynomial");
    bool first = true;
    Rat best;
    for (const auto& [k, c] : h.terms()) {
        Rat w = make_rat(k.first * v0 + k.second * v1, v0 * v1);
        if (first || w < best) { best = w; first = false; }
    }
    return best;
}

SpectrumPartition partition(const Spectrum& sp, const LambdaSet& L) {
    if (L.gamma.g() != 1 || L.gamma.v(0) != sp.v0 || L.gamma.v(1) != sp.v1)
        throw error(errc::semigroup_mismatch,
                    "spectrum and lambda set refer to different semigroups");
    long prod = sp.v0 * sp.v1;
    SpectrumPartition part;
    for (const Rat& s : sp.values) {
        if (!L.lambda1) { part.sMinus1.push_back(s); continue; }
        Rat cut = make_rat(*L.lambda1, prod);
        if (s < cut) { part.sMinus1.push_back(s); continue; }
        // s = delta/prod with delta a gap >= lambda1.
        Rat scaled = s * Rat(prod);
        long delta = scaled.get_num().get_si();
        if (L.lambdaMinusGamma.count(delta)) part.s0.push_back(s);
        else part.sTilde.push_back(s);
    }
    return part;
}

}  // namespace planebranch
