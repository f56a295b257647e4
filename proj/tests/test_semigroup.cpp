#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "planebranch/error.hpp"
#include "planebranch/semigroup.hpp"

using namespace planebranch;

namespace {

const std::vector<std::vector<long>> corpus = {
    {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {4, 7},
    {5, 6}, {5, 7}, {6, 7}, {7, 9}, {4, 6, 13}, {4, 6, 15}, {4, 6, 17},
    {6, 9, 19}, {6, 9, 22}, {4, 10, 21}, {6, 8, 25}, {8, 12, 26, 53},
};

errc code_of(const std::vector<long>& gens) {
    try {
        NumSemigroup::from_generators(gens);
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error for the given generators");
    return errc::parse_error;
}

}  // namespace

TEST_CASE("membership agrees with the DP oracle exhaustively") {
    for (const auto& gens : corpus) {
        NumSemigroup S = NumSemigroup::from_generators(gens);
        long limit = S.conductor() + 50;
        auto oracle = oracles::reachable(gens, limit);
        for (long z = 0; z <= limit; ++z) {
            INFO("gens[0]=" << gens[0] << " z=" << z);
            CHECK(S.contains(z) == static_cast<bool>(oracle[z]));
        }
        CHECK_FALSE(S.contains(-1));
    }
}

TEST_CASE("symmetry and gap count") {
    for (const auto& gens : corpus) {
        NumSemigroup S = NumSemigroup::from_generators(gens);
        long c = S.conductor();
        CHECK(c % 2 == 0);
        CHECK(static_cast<long>(S.gaps().size()) == c / 2);
        for (long z = 0; z < c; ++z) {
            // exactly one of z, c-1-z is a value
            CHECK(S.contains(z) != S.contains(c - 1 - z));
        }
    }
}

TEST_CASE("representation is unique and decides membership") {
    for (const auto& gens : corpus) {
        NumSemigroup S = NumSemigroup::from_generators(gens);
        long g = S.g();
        for (long z = 0; z <= S.conductor() + 30; ++z) {
            auto s = S.represent(z);
            REQUIRE(static_cast<long>(s.size()) == g + 1);
            long sum = s[0] * S.v(0);
            for (long i = 1; i <= g; ++i) {
                CHECK(s[i] >= 0);
                CHECK(s[i] < S.n()[i]);
                sum += s[i] * S.v(i);
            }
            CHECK(sum == z);
            CHECK(S.contains(z) == (s[0] >= 0));
        }
    }
}

TEST_CASE("char exponents round-trip") {
    for (const auto& gens : corpus) {
        NumSemigroup S = NumSemigroup::from_generators(gens);
        NumSemigroup T = NumSemigroup::from_char_exponents(S.char_exponents());
        CHECK(S == T);
    }
    CHECK(NumSemigroup::from_generators({4, 6, 13}).char_exponents() ==
          std::vector<long>{4, 6, 7});
    CHECK(NumSemigroup::from_generators({6, 9, 19}).char_exponents() ==
          std::vector<long>{6, 9, 10});
    CHECK(NumSemigroup::from_char_exponents({6, 9, 10}).gens() ==
          std::vector<long>{6, 9, 19});
}

TEST_CASE("known conductors") {
    CHECK(NumSemigroup::from_generators({2, 3}).conductor() == 2);
    CHECK(NumSemigroup::from_generators({6, 7}).conductor() == 30);
    CHECK(NumSemigroup::from_generators({4, 6, 13}).conductor() == 16);
    CHECK(NumSemigroup::from_generators({6, 9, 19}).conductor() == 42);
    CHECK(NumSemigroup::from_generators({2, 3}).gaps() == std::vector<long>{1});
}

TEST_CASE("invalid generator systems are rejected") {
    CHECK(code_of({4, 6}) == errc::not_primitive);
    CHECK(code_of({6, 9}) == errc::not_primitive);
    CHECK(code_of({4, 6, 13, 17}) == errc::not_minimal);  // 17 = 4 + 13
    CHECK(code_of({4, 6, 10}) == errc::not_primitive);    // gcd chain stalls at 2
    CHECK(code_of({1, 2}) == errc::not_plane_branch);
    CHECK(code_of({5, 3}) == errc::not_plane_branch);
    CHECK(code_of({3, 7, 11}) == errc::not_plane_branch);  // gcd chain already at 1
    CHECK(code_of({4, 6, 11}) == errc::not_plane_branch);  // n_1 v_1 = 12 > 11
    CHECK(code_of({}) == errc::not_plane_branch);
}
