#include "kstab/polynomial.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "test_support.hpp"

using namespace kstab;
using namespace kstab::testing;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("polynomial basics") {
    Polynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z(Rational(17, 3)) == Rational(0));
    CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);

    Polynomial p = poly({1, -2, 3});  // 3t^2 - 2t + 1
    CHECK(p.degree() == 2);
    CHECK(p(Rational(2)) == Rational(9));
    CHECK(p(Rational(-1, 2)) == Rational(1) + Rational(1) + frac(3, 4));
    CHECK(p.coefficient(5) == Rational(0));
    CHECK_THROWS_AS(z.leading(), std::domain_error);
}

TEST_CASE("condition polynomial spot values") {
    // frozen reference evaluations of the degree-12 condition polynomial
    Polynomial R = g2_condition();
    CHECK(R(frac(1, 2)) == frac(7315083, 5600));
    CHECK(R(frac(98, 100)) ==
          Rational(mpz_class("-12097691278181901659043"), mpz_class("47683715820312500000")));
    CHECK(R(Rational(0)) == Rational(0));
}

TEST_CASE("definite integral closed forms") {
    CHECK(definite_integral(x1_integrand(), Rational(-1), Rational(2)) == frac(120285, 56));
    CHECK(definite_integral(x2_integrand(), Rational(0), Rational(8)) ==
          Rational(mpz_class("3672386428957884416"), mpz_class("153153")));
    CHECK(definite_integral(Polynomial(), Rational(0), Rational(1)) == Rational(0));
    CHECK(definite_integral(poly({0, 1}), Rational(0), Rational(1)) == frac(1, 2));
    CHECK_THROWS_AS(definite_integral(poly({1}), Rational(1), Rational(0)),
                    std::invalid_argument);
}

namespace {

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
    int deg = static_cast<int>(rng() % static_cast<uint64_t>(max_degree + 1));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 6) + 1);
    return Polynomial(std::move(c));
}

Rational random_point(std::mt19937_64& rng) {
    return Rational(static_cast<long>(rng() % 65) - 32, 8);
}

} // namespace

TEST_CASE("integration is linear and additive over subintervals") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, 9), q = random_poly(rng, 9);
        Rational pts[3] = {random_point(rng), random_point(rng), random_point(rng)};
        std::sort(pts, pts + 3);
        const Rational &a = pts[0], &c = pts[1], &b = pts[2];
        CHECK(definite_integral(p + q, a, b) ==
              definite_integral(p, a, b) + definite_integral(q, a, b));
        CHECK(definite_integral(p, a, b) ==
              definite_integral(p, a, c) + definite_integral(p, c, b));
    }
}

TEST_CASE("derivative and antiderivative invert") {
    std::mt19937_64 rng(211);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 8);
        CHECK(p.antiderivative().derivative() == p);
    }
}

TEST_CASE("division with remainder") {
    std::mt19937_64 rng(331);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(rng, 8);
        Polynomial b = random_poly(rng, 4);
        if (b.is_zero())
            continue;
        auto [q, r] = Polynomial::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(Polynomial::divmod(poly({1}), Polynomial()), std::domain_error);
}

TEST_CASE("gcd and square-free part") {
    Polynomial half = poly({-1, 2});  // 2t - 1
    Polynomial shifted = poly({2, 1});  // t + 2
    Polynomial p = half * half * shifted;  // double root at 1/2
    Polynomial sf = p.square_free_part();
    CHECK(sf.degree() == 2);
    CHECK(sf(frac(1, 2)) == Rational(0));
    CHECK(sf(Rational(-2)) == Rational(0));

    Polynomial g = Polynomial::gcd(half * shifted, half * half);
    CHECK(g.degree() == 1);
    CHECK(g(frac(1, 2)) == Rational(0));
    CHECK(g.leading() == Rational(1));  // monic

    CHECK(Polynomial::gcd(Polynomial(), Polynomial()).is_zero());
    CHECK_THROWS_AS(Polynomial().square_free_part(), std::domain_error);
}

TEST_CASE("content and scalar ops") {
    Polynomial p = rpoly({frac(3, 4), frac(9, 2)});
    CHECK(p.content() == frac(3, 4));
    CHECK((frac(4, 3) * p) == rpoly({Rational(1), Rational(6)}));
    CHECK((-p)(Rational(1)) == -(p(Rational(1))));
    CHECK(p.times_x() == rpoly({Rational(0), frac(3, 4), frac(9, 2)}));
}

TEST_CASE("polynomial printing") {
    CHECK(poly({0, 1}).str() == "t");
    CHECK(poly({-1, 0, 1}).str() == "t^2 - 1");
    CHECK(g2_density().str('t') == "(288/5)*t^5 - 576*t^3 + (2592/5)*t");
    CHECK(Polynomial().str() == "0");
    CHECK(poly({2}).str() == "2");
}

TEST_SUITE_END();
