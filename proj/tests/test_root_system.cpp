#include "kstab/root_system.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "test_support.hpp"

using namespace kstab;
using namespace kstab::testing;

TEST_SUITE_BEGIN("roots");

namespace {

Weight w2(long a, long b) { return Weight({Rational(a), Rational(b)}); }

std::set<std::vector<long>> root_set(const RootSystem& rs) {
    std::set<std::vector<long>> out;
    for (const auto& r : rs.positive_roots()) {
        std::vector<long> v;
        for (size_t i = 0; i < r.size(); ++i) {
            CHECK(r[i].is_integer());
            v.push_back(r[i].num().get_si());
        }
        out.insert(v);
    }
    return out;
}

RootSystem g2() { return RootSystem::build({{CartanType::G2, 2, Rational(1)}}); }

} // namespace

TEST_CASE("G2 root system") {
    RootSystem rs = g2();
    CHECK(rs.rank() == 2);
    CHECK(root_set(rs) ==
          std::set<std::vector<long>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
    CHECK(rs.half_sum_positive_roots() == w2(5, 3));

    CHECK(rs.gram()[0][0] == Rational(2));
    CHECK(rs.gram()[0][1] == Rational(-3));
    CHECK(rs.gram()[1][0] == Rational(-3));
    CHECK(rs.gram()[1][1] == Rational(6));
}

TEST_CASE("G2 pairing table") {
    RootSystem rs = g2();
    // closed forms of <alpha, x1 a1 + x2 a2> for each positive root
    for (long x1 : {-2L, 0L, 3L, 12L}) {
        for (long x2 : {-1L, 2L, 6L}) {
            Weight x = w2(x1, x2);
            CHECK(rs.pairing(w2(1, 0), x) == Rational(2 * x1 - 3 * x2));
            CHECK(rs.pairing(w2(0, 1), x) == Rational(3 * (-x1 + 2 * x2)));
            CHECK(rs.pairing(w2(1, 1), x) == Rational(-x1 + 3 * x2));
            CHECK(rs.pairing(w2(2, 1), x) == Rational(x1));
            CHECK(rs.pairing(w2(3, 1), x) == Rational(3 * (x1 - x2)));
            CHECK(rs.pairing(w2(3, 2), x) == Rational(3 * x2));
        }
    }
}

TEST_CASE("F4 root system with the half-scale form") {
    RootSystem rs = RootSystem::build({{CartanType::F4, 4, frac(1, 2)}});
    CHECK(rs.positive_roots().size() == 24);
    // invariant form: diag (2,2,1,1), off-diagonal -1, -1, -1/2 along the chain
    const auto& g = rs.gram();
    CHECK(g[0][0] == Rational(2));
    CHECK(g[1][1] == Rational(2));
    CHECK(g[2][2] == Rational(1));
    CHECK(g[3][3] == Rational(1));
    CHECK(g[0][1] == Rational(-1));
    CHECK(g[1][2] == Rational(-1));
    CHECK(g[2][3] == frac(-1, 2));
    CHECK(g[0][2] == Rational(0));
    CHECK(g[0][3] == Rational(0));
    CHECK(g[1][3] == Rational(0));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(g[i][j] == g[j][i]);
    // half-sum in simple-root coordinates
    CHECK(rs.half_sum_positive_roots() ==
          Weight({Rational(8), Rational(15), Rational(21), Rational(11)}));
}

TEST_CASE("A1 with unit-length root") {
    RootSystem rs = RootSystem::build({{CartanType::A, 1, frac(1, 2)}});
    CHECK(rs.positive_roots().size() == 1);
    CHECK(rs.gram()[0][0] == Rational(1));
    CHECK(rs.half_sum_positive_roots() == Weight({frac(1, 2)}));
}

TEST_CASE("product system PSL2 x G2") {
    RootSystem rs = RootSystem::build(
        {{CartanType::A, 1, frac(1, 2)}, {CartanType::G2, 2, Rational(1)}});
    CHECK(rs.rank() == 3);
    CHECK(rs.positive_roots().size() == 7);
    CHECK(rs.half_sum_positive_roots() == Weight({frac(1, 2), Rational(5), Rational(3)}));
    // cross-component orthogonality
    Weight a0({Rational(1), Rational(0), Rational(0)});
    Weight a1({Rational(0), Rational(1), Rational(0)});
    Weight a2({Rational(0), Rational(0), Rational(1)});
    CHECK(rs.pairing(a0, a1) == Rational(0));
    CHECK(rs.pairing(a0, a2) == Rational(0));
    CHECK(rs.pairing(a0, a0) == Rational(1));
    CHECK(rs.pairing(Weight::zero(3), a1) == Rational(0));
}

TEST_CASE("positive root counts match the closed forms") {
    auto count = [](CartanType t, int n) {
        return RootSystem::build({{t, n, Rational(1)}}).positive_roots().size();
    };
    for (int n = 1; n <= 5; ++n)
        CHECK(count(CartanType::A, n) == static_cast<size_t>(n * (n + 1) / 2));
    for (int n = 2; n <= 5; ++n) {
        CHECK(count(CartanType::B, n) == static_cast<size_t>(n * n));
        CHECK(count(CartanType::C, n) == static_cast<size_t>(n * n));
    }
    for (int n = 3; n <= 5; ++n)
        CHECK(count(CartanType::D, n) == static_cast<size_t>(n * (n - 1)));
    CHECK(count(CartanType::G2, 2) == 6);
    CHECK(count(CartanType::F4, 4) == 24);
}

TEST_CASE("torus factors contribute coordinates but no roots") {
    RootSystem rs = RootSystem::build(
        {{CartanType::Torus, 2, frac(1, 3)}, {CartanType::A, 1, Rational(1)}});
    CHECK(rs.rank() == 3);
    CHECK(rs.positive_roots().size() == 1);
    CHECK(rs.gram()[0][0] == frac(1, 3));
    CHECK(rs.gram()[1][1] == frac(1, 3));
    CHECK(rs.gram()[0][1] == Rational(0));
}

TEST_CASE("invalid Cartan data") {
    CHECK_THROWS_AS(cartan_type_from_string("E6"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_type_from_string("E"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_type_from_string("H4"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::B, 1, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::D, 2, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::G2, 3, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::F4, 2, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::A, 0, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::A, 1, Rational(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build({{CartanType::A, 1, Rational(-2)}}), std::invalid_argument);
}

TEST_CASE("every positive root pairs positively with the half-sum") {
    for (auto factors : {std::vector<CartanFactor>{{CartanType::G2, 2, Rational(1)}},
                         std::vector<CartanFactor>{{CartanType::F4, 4, frac(1, 2)}},
                         std::vector<CartanFactor>{{CartanType::B, 3, Rational(2)}},
                         std::vector<CartanFactor>{{CartanType::C, 3, frac(1, 5)}},
                         std::vector<CartanFactor>{{CartanType::D, 4, Rational(1)}},
                         std::vector<CartanFactor>{{CartanType::A, 1, frac(1, 2)},
                                                   {CartanType::G2, 2, Rational(1)}}}) {
        RootSystem rs = RootSystem::build(factors);
        const Weight& hs = rs.half_sum_positive_roots();
        for (const auto& alpha : rs.positive_roots())
            CHECK(rs.pairing(alpha, hs) > Rational(0));
    }
}

TEST_CASE("pairing is bilinear, symmetric, and scales with the form") {
    std::mt19937_64 rng(99);
    RootSystem rs = RootSystem::build(
        {{CartanType::A, 1, frac(1, 2)}, {CartanType::G2, 2, Rational(1)}});
    RootSystem scaled = rs.scaled(frac(3, 7));
    auto rand_weight = [&] {
        std::vector<Rational> c;
        for (size_t i = 0; i < rs.rank(); ++i)
            c.emplace_back(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
        return Weight(std::move(c));
    };
    for (int i = 0; i < 100; ++i) {
        Weight u = rand_weight(), v = rand_weight(), w = rand_weight();
        Rational lambda(static_cast<long>(rng() % 9) - 4, 3);
        CHECK(rs.pairing(u, v) == rs.pairing(v, u));
        CHECK(rs.pairing(u + w, v) == rs.pairing(u, v) + rs.pairing(w, v));
        CHECK(rs.pairing(lambda * u, v) == lambda * rs.pairing(u, v));
        CHECK(scaled.pairing(u, v) == frac(3, 7) * rs.pairing(u, v));
    }
    CHECK_THROWS_AS(rs.pairing(Weight::zero(2), Weight::zero(3)), std::invalid_argument);
}

TEST_SUITE_END();
