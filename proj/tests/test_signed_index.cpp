#include <doctest.h>

#include <random>

#include "zeta_blocks/error.hpp"
#include "zeta_blocks/selftest.hpp"
#include "zeta_blocks/signed_index.hpp"

using namespace zb;

namespace {

SignedIndex S(std::vector<int> v) { return SignedIndex::from_signed(v); }
SignedInteger I(int v) { return SignedInteger::from_signed(v); }
Index K(std::vector<int> v) { return {std::move(v)}; }

}  // namespace

TEST_CASE("oplus") {
    CHECK(oplus(I(-2), I(2)) == I(-4));
    CHECK(oplus(I(3), I(-1)) == I(-4));
    CHECK(oplus(I(1), I(1)) == I(2));
    CHECK(oplus(I(-1), I(-1)) == I(2));
}

TEST_CASE("oplus is commutative and associative") {
    std::vector<int> vals;
    for (int m = 1; m <= 10; ++m) {
        vals.push_back(m);
        vals.push_back(-m);
    }
    for (int a : vals)
        for (int b : vals) {
            auto ab = oplus(I(a), I(b));
            REQUIRE(ab == oplus(I(b), I(a)));
            REQUIRE(ab.magnitude == std::abs(a) + std::abs(b));
            REQUIRE(ab.barred == ((a < 0) != (b < 0)));
            for (int c : vals) REQUIRE(oplus(ab, I(c)) == oplus(I(a), oplus(I(b), I(c))));
        }
}

TEST_CASE("signed integer encoding") {
    CHECK(I(-2).barred);
    CHECK(I(-2).magnitude == 2);
    CHECK(I(5).to_signed() == 5);
    CHECK_THROWS_AS(I(0), Error);
    CHECK(S({1, -2}).to_signed() == std::vector<int>{1, -2});
    CHECK(S({1, -2, -3}).bar_parity() == false);
    CHECK(S({1, -2}).bar_parity() == true);
    CHECK(S({-1}).convergent());
    CHECK_FALSE(S({2, 1}).convergent());
}

TEST_CASE("s1 from blocks") {
    CHECK(s1_from_blocks(K({1})) == S({1}));
    CHECK(s1_from_blocks(K({4})) == S({1, 1, -2}));
    CHECK(s1_from_blocks(K({2, 3})) == S({3, -2}));
    CHECK(s1_from_blocks(K({2})) == S({-2}));
    CHECK(s1_from_blocks(K({3})) == S({1, -2}));
}

TEST_CASE("s1 inductive") {
    CHECK(s1_inductive(K({1, 2})) == S({3}));
    CHECK(s1_inductive(K({2, 3})) == S({3, -2}));
    CHECK(s1_inductive(K({1})) == S({1}));
    CHECK(s1_inductive(K({5})) == S({1, 1, 1, -2}));
    CHECK_THROWS_WITH_AS(s1_inductive(K({1, 4})), doctest::Contains("4"), Error);
    try {
        s1_inductive(K({2, 2, 4}));
        FAIL("expected unsupported_step");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported_step);
    }
}

TEST_CASE("s1 constructions agree and conserve weight") {
    int count = 0;
    for (const Index& s : inductive_domain(6, 7)) {
        auto a = s1_from_blocks(s);
        REQUIRE(a == s1_inductive(s));
        REQUIRE(a.total_magnitude() == s.weight());
        ++count;
    }
    CHECK(count > 1000);
}

TEST_CASE("pi expansion") {
    CHECK(pi_expansion(S({3})) == std::vector<SignedIndex>{S({3})});
    CHECK(pi_expansion(S({1, -2})) == std::vector<SignedIndex>{S({1, -2}), S({-3})});
    CHECK(pi_expansion(S({1, 1, 2})) ==
          std::vector<SignedIndex>{S({1, 1, 2}), S({1, 3}), S({2, 2}), S({4})});
}

TEST_CASE("pi expansion size and conserved quantities") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> mag(1, 5), len(1, 7), coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> v(len(rng));
        for (int& x : v) x = coin(rng) ? mag(rng) : -mag(rng);
        auto s = S(v);
        auto all = pi_expansion(s);
        REQUIRE(all.size() == (std::size_t{1} << (v.size() - 1)));
        for (const auto& p : all) {
            REQUIRE(p.total_magnitude() == s.total_magnitude());
            REQUIRE(p.bar_parity() == s.bar_parity());
        }
        CHECK(all.front() == s);
        CHECK(all.back().size() == 1);
    }
}

TEST_CASE("epsilon sign") {
    CHECK(epsilon_sign(K({1, 2})) == 1);
    CHECK(epsilon_sign(K({2, 1, 3})) == -1);
    CHECK(epsilon_sign(K({1})) == 1);
}

TEST_CASE("star expansion") {
    CHECK(star_expand(K({2})) == std::vector<Index>{K({2})});
    CHECK(star_expand(K({1, 2})) == std::vector<Index>{K({1, 2}), K({3})});
    CHECK(star_expand(K({2, 1, 3})) ==
          std::vector<Index>{K({2, 1, 3}), K({3, 3}), K({2, 4}), K({6})});
    for (const auto& t : star_expand(K({1, 1, 2, 1, 3}))) CHECK(t.weight() == 8);
    CHECK(star_expand(K({1, 1, 2, 1, 3})).size() == 16);
}
