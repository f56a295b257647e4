#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "planebranch/differentials.hpp"
#include "planebranch/error.hpp"
#include "planebranch/parse.hpp"
#include "planebranch/spectrum.hpp"

using namespace planebranch;

TEST_CASE("gap form equals grid form, exhaustively") {
    for (long v0 = 2; v0 <= 20; ++v0) {
        for (long v1 = v0 + 1; v0 * v1 <= 400; ++v1) {
            if (std::gcd(v0, v1) != 1) continue;
            Spectrum a = spectrum(v0, v1);
            Spectrum b = spectrum_grid(v0, v1);
            CHECK(a.values == b.values);
        }
    }
}

TEST_CASE("size, symmetry, extremes, sum") {
    for (auto [v0, v1] : {std::pair<long, long>{2, 3}, {3, 4}, {5, 7}, {6, 7}, {8, 13}}) {
        Spectrum sp = spectrum(v0, v1);
        long mu = (v0 - 1) * (v1 - 1);
        REQUIRE(static_cast<long>(sp.values.size()) == mu);
        Rat sum(0);
        for (long k = 0; k < mu; ++k) {
            sum += sp.values[k];
            CHECK(sp.values[k] == -sp.values[mu - 1 - k]);  // symmetry about 0
            CHECK(sp.values[k] > -1);
            CHECK(sp.values[k] < 1);
        }
        CHECK(sum == 0);
        CHECK(sp.values.front() == make_rat(-(mu - 1), v0 * v1));
    }
    CHECK(spectrum(2, 3).values == std::vector<Rat>{make_rat(-1, 6), make_rat(1, 6)});
}

TEST_CASE("non-coprime pairs are rejected") {
    for (auto [v0, v1] : {std::pair<long, long>{4, 6}, {2, 2}, {6, 3}, {1, 5}}) {
        try {
            spectrum(v0, v1);
            FAIL("expected NOT_COPRIME");
        } catch (const error& e) {
            CHECK(e.code() == errc::not_coprime);
        }
    }
}

TEST_CASE("newton order") {
    CHECK(newton_order(parse_poly("X1^3 + X2^2"), 2, 3) == 1);
    CHECK(newton_order(parse_poly("X1*X2"), 3, 4) == make_rat(7, 12));
    CHECK(newton_order(parse_poly("X1^5*X2^2 + X1^3*X2^4"), 6, 7) == make_rat(44, 42));
    try {
        newton_order(BiPoly(), 2, 3);
        FAIL("expected BAD_CASE");
    } catch (const error& e) {
        CHECK(e.code() == errc::bad_case);
    }
}

TEST_CASE("partition for a quasihomogeneous branch is all S_-1") {
    Parameterization p = Parameterization::make(5, {{7, Rat(1)}});
    LambdaSet L = lambda_set(p);
    Spectrum sp = spectrum(5, 7);
    SpectrumPartition part = partition(sp, L);
    CHECK(part.sMinus1.size() == sp.values.size());
    CHECK(part.sTilde.empty());
    CHECK(part.s0.empty());
}

TEST_CASE("partition of the <5,7> one-term tail branch") {
    // lambda1 = 23, Lambda \ Gamma = {23}, G empty
    Parameterization p = Parameterization::make(5, {{7, Rat(1)}, {18, Rat(1)}});
    LambdaSet L = lambda_set(p);
    Spectrum sp = spectrum(5, 7);
    SpectrumPartition part = partition(sp, L);
    CHECK(part.s0 == std::vector<Rat>{make_rat(23, 35)});
    CHECK(part.sTilde.empty());
    CHECK(part.sMinus1.size() == sp.values.size() - 1);
    for (const Rat& s : part.sMinus1) CHECK(s < make_rat(23, 35));
}

TEST_CASE("partition sizes always add up to mu") {
    for (auto terms : {std::map<long, Rat>{{7, Rat(1)}}, {{7, Rat(1)}, {18, Rat(1)}},
                       {{7, Rat(1)}, {8, Rat(1)}}, {{7, Rat(1)}, {9, Rat(2)}, {11, Rat(1)}}}) {
        Parameterization p = Parameterization::make(5, terms);
        LambdaSet L = lambda_set(p);
        Spectrum sp = spectrum(5, 7);
        SpectrumPartition part = partition(sp, L);
        CHECK(part.sMinus1.size() + part.sTilde.size() + part.s0.size() == sp.values.size());
        CHECK(part.s0.size() == L.lambdaMinusGamma.size());
        CHECK(part.sTilde.size() == L.gSet.size());
    }
}

TEST_CASE("partition rejects a mismatched spectrum") {
    Parameterization p = Parameterization::make(5, {{7, Rat(1)}});
    LambdaSet L = lambda_set(p);
    try {
        partition(spectrum(3, 4), L);
        FAIL("expected SEMIGROUP_MISMATCH");
    } catch (const error& e) {
        CHECK(e.code() == errc::semigroup_mismatch);
    }
}
