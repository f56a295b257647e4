#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planebranch/differentials.hpp"
#include "planebranch/error.hpp"
#include "planebranch/parse.hpp"

using namespace planebranch;

namespace {

std::vector<Parameterization> corpus() {
    std::vector<Parameterization> out;
    out.push_back(Parameterization::make(2, {{3, Rat(1)}}));
    out.push_back(Parameterization::make(3, {{5, Rat(1)}}));
    out.push_back(Parameterization::make(5, {{7, Rat(1)}}));
    out.push_back(Parameterization::make(5, {{7, Rat(1)}, {18, Rat(1)}}));
    out.push_back(Parameterization::make(4, {{6, Rat(1)}, {7, Rat(1)}}));
    out.push_back(Parameterization::make(6, {{9, Rat(1)}, {10, Rat(1)}}));
    out.push_back(puiseux(BranchEquation::from_bipoly(parse_poly("X2^6 - X1^7 + X1^5*X2^2"))));
    out.push_back(puiseux(BranchEquation::from_bipoly(parse_poly("X2^5 - X1^7 + X1^4*X2^3"))));
    return out;
}

}  // namespace

TEST_CASE("serial and parallel echelon report the same pivot columns") {
    for (const auto& p : corpus()) {
        auto rows = lambda_generator_rows(p);
        long ncols = p.semigroup().conductor() - 1;
        CHECK(echelon_pivots_serial(rows, ncols) == echelon_pivots_parallel(rows, ncols));
        CHECK(lambda_set(p, false).small == lambda_set(p, true).small);
    }
}

TEST_CASE("pivot columns agree with plain rational elimination") {
    // small-conductor instances where the naive oracle is instant
    for (const auto& p : corpus()) {
        if (p.semigroup().conductor() > 20) continue;
        auto rows = lambda_generator_rows(p);
        long ncols = p.semigroup().conductor() - 1;
        CHECK(echelon_pivots_serial(rows, ncols) == oracles::pivots_mpq(rows, ncols));
    }
    // random integer matrices, not just the structured ones
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int iter = 0; iter < 40; ++iter) {
        long nrows = 1 + iter % 12, ncols = 1 + (iter * 7) % 15;
        std::vector<std::vector<Int>> rows(nrows, std::vector<Int>(ncols));
        for (auto& r : rows)
            for (auto& x : r) x = d(rng);
        auto expected = oracles::pivots_mpq(rows, ncols);
        CHECK(echelon_pivots_serial(rows, ncols) == expected);
        CHECK(echelon_pivots_parallel(rows, ncols) == expected);
    }
}

TEST_CASE("quasihomogeneous branches have Lambda = Gamma") {
    Parameterization p = Parameterization::make(5, {{7, Rat(1)}});
    LambdaSet L = lambda_set(p);
    CHECK(L.lambdaMinusGamma.empty());
    CHECK_FALSE(L.lambda1.has_value());
    CHECK(L.gSet.empty());
    CHECK(L.tjurina == 24);
    CHECK(L.lambdaC == 24);  // last gap is c - 1 = 23
    for (long z = 1; z < 24; ++z) CHECK(L.contains(z) == p.semigroup().contains(z));
    try {
        g_set(L);
        FAIL("expected LAMBDA_EMPTY");
    } catch (const error& e) {
        CHECK(e.code() == errc::lambda_empty);
    }
}

TEST_CASE("known lambda sets") {
    // <4,6,13> branch: Lambda \ Gamma = {11, 15}, tau = 14
    {
        LambdaSet L = lambda_set(Parameterization::make(4, {{6, Rat(1)}, {7, Rat(1)}}));
        CHECK(L.lambdaMinusGamma == std::set<long>{11, 15});
        CHECK(L.tjurina == 14);
        CHECK(L.lambda1 == 11);
        CHECK(L.lambda0 == 7);
        CHECK(L.gSet.empty());
    }
    // first <6,7> stratum: {15, 22, 23, 29}, tau = 26
    {
        auto p = puiseux(BranchEquation::from_bipoly(parse_poly("X2^6 + X1^7 + X1^5*X2^2")));
        LambdaSet L = lambda_set(p);
        CHECK(L.lambdaMinusGamma == std::set<long>{15, 22, 23, 29});
        CHECK(L.tjurina == 26);
        CHECK(L.lambda1 == 15);
        CHECK(L.lambda0 == 9);
    }
    // one-term tail family <5,7>, s = 1: lambda1 = 23
    {
        LambdaSet L = lambda_set(Parameterization::make(5, {{7, Rat(1)}, {18, Rat(1)}}));
        CHECK(L.lambdaMinusGamma == std::set<long>{23});
        CHECK(L.tjurina == 23);
        CHECK(L.gSet.empty());
    }
}

TEST_CASE("structural properties of Lambda") {
    for (const auto& p : corpus()) {
        const NumSemigroup& S = p.semigroup();
        LambdaSet L = lambda_set(p);
        long c = S.conductor();

        // Gamma \ {0} is contained in Lambda (h = x1^a x2^b gives any value)
        for (long z = 1; z < c; ++z)
            if (S.contains(z)) CHECK(L.contains(z));

        // Lambda is a Gamma-module: Gamma + Lambda subset Lambda
        for (long l : L.small)
            for (long v : S.gens())
                CHECK(L.contains(l + v));

        CHECK(L.tjurina == S.milnor() - static_cast<long>(L.lambdaMinusGamma.size()));

        if (L.lambda1) {
            // Zariski: lambda1 > v0 + v1, and (lambda1, lambda1 + v0) misses Lambda\Gamma
            CHECK(*L.lambda1 > S.v(0) + S.v(1));
            CHECK(*L.lambda0 == *L.lambda1 - S.v(0));
            for (long z = *L.lambda1 + 1; z < *L.lambda1 + S.v(0); ++z)
                CHECK_FALSE(L.lambdaMinusGamma.count(z));
        }

        // v_i - v0 is never a value of a differential
        for (long i = 1; i <= S.g(); ++i) CHECK_FALSE(L.contains(S.v(i) - S.v(0)));
    }
}

TEST_CASE("lambda_set needs enough precision") {
    Parameterization p = Parameterization::make(6, {{9, Rat(1)}, {10, Rat(1)}}, 30);
    try {
        lambda_set(p);
        FAIL("expected PRECISION_EXHAUSTED");
    } catch (const error& e) {
        CHECK(e.code() == errc::precision_exhausted);
    }
}

TEST_CASE("a single extra term raises lambda1 to l + v0") {
    // (T^{v0}, T^{v1} + T^l): when l + v0 is a gap, it is the first
    // differential value outside Gamma
    for (auto [v0, v1, l] : {std::tuple<long, long, long>{5, 7, 18},
                             {5, 7, 13}, {6, 7, 16}, {4, 7, 13}, {7, 9, 24}}) {
        NumSemigroup S = NumSemigroup::from_generators({v0, v1});
        REQUIRE_FALSE(S.contains(l + v0));
        LambdaSet L = lambda_set(Parameterization::make(v0, {{v1, Rat(1)}, {l, Rat(1)}}));
        CHECK(L.lambda1 == l + v0);
    }
}

TEST_CASE("the dimension bound never exceeds #(Lambda \\ Gamma)") {
    for (const auto& p : corpus()) {
        const NumSemigroup& S = p.semigroup();
        if (S.g() <= 1) continue;
        Rat bound = dim_lower_bound(S);
        long ceil_bound =
            static_cast<long>(mpz_class((bound.get_num() + bound.get_den() - 1) /
                                        bound.get_den())
                                  .get_si());
        LambdaSet L = lambda_set(p);
        CHECK(static_cast<long>(L.lambdaMinusGamma.size()) >= ceil_bound);
    }
}

TEST_CASE("dimension lower bound") {
    CHECK(dim_lower_bound(NumSemigroup::from_generators({6, 9, 19})) == make_rat(7, 2));
    CHECK(dim_lower_bound(NumSemigroup::from_generators({4, 6, 13})) == Rat(2));
    CHECK(dim_lower_bound(NumSemigroup::from_generators({6, 7})) == 0);
}
