#include "kstab/spherical_data.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kstab/registry.hpp"
#include "test_support.hpp"

using namespace kstab;
using namespace kstab::testing;

TEST_SUITE_BEGIN("variety");

namespace {

RootSystem g2() { return RootSystem::build({{CartanType::G2, 2, Rational(1)}}); }

SphericalData g2_facet(const Rational& s) {
    return SphericalData{g2(),
                         MomentLine{Weight({Rational(12), Rational(6)}),
                                    Weight({Rational(0), Rational(2)}), Rational(0), s},
                         Kind::non_horospherical};
}

RootSystem psl2_g2() {
    return RootSystem::build({{CartanType::A, 1, frac(1, 2)}, {CartanType::G2, 2, Rational(1)}});
}

SphericalData x1() {
    return SphericalData{psl2_g2(),
                         MomentLine{Weight({Rational(1), Rational(10), Rational(6)}),
                                    Weight({Rational(1), Rational(1), Rational(0)}),
                                    Rational(-1), Rational(2)},
                         Kind::non_horospherical};
}

} // namespace

TEST_CASE("restricted positive roots of the G2 facet") {
    SphericalData data = g2_facet(frac(1, 2));
    auto roots = restricted_positive_roots(data);
    CHECK(roots.size() == 6);  // no pairing vanishes identically

    // pairing polynomials along chi + t sigma, in root-closure order
    std::vector<Polynomial> expected = {
        poly({6, -6}),   // a1:        6(1-t)
        poly({0, 12}),   // a2:        12t
        poly({6, 6}),    // a1+a2:     6(1+t)
        poly({12}),      // 2a1+a2:    constant 12
        poly({18, -6}),  // 3a1+a2:    6(3-t)
        poly({18, 6}),   // 3a1+2a2:   6(3+t)
    };
    REQUIRE(roots.size() == expected.size());
    for (size_t i = 0; i < roots.size(); ++i)
        CHECK(pairing_polynomial(data.root_system, roots[i], data.line.chi, data.line.sigma) ==
              expected[i]);
}

TEST_CASE("restricted positive roots of x1 include a constant pairing") {
    SphericalData data = x1();
    auto roots = restricted_positive_roots(data);
    CHECK(roots.size() == 7);
    bool found_constant_18 = false;
    for (const auto& alpha : roots) {
        Polynomial f = pairing_polynomial(data.root_system, alpha, data.line.chi, data.line.sigma);
        if (f == poly({18}))
            found_constant_18 = true;
    }
    CHECK(found_constant_18);
}

TEST_CASE("the F4 examples drop the two roots orthogonal to the moment line") {
    RootSystem f4 = RootSystem::build({{CartanType::F4, 4, frac(1, 2)}});
    SphericalData data{
        f4,
        MomentLine{Weight({Rational(2), Rational(3), Rational(4), Rational(2)}),
                   Weight({Rational(0), Rational(1), Rational(2), Rational(1)}), Rational(0),
                   frac(1, 2)},
        Kind::non_horospherical};
    CHECK(restricted_positive_roots(data).size() == 22);
}

TEST_CASE("torus data has no restricted roots") {
    RootSystem torus = RootSystem::build({{CartanType::Torus, 1, Rational(1)}});
    SphericalData data{torus,
                       MomentLine{Weight({Rational(0)}), Weight({Rational(1)}), Rational(0),
                                  Rational(1)},
                       Kind::horospherical};
    CHECK(restricted_positive_roots(data).empty());
    CHECK(validate(data).ok);
}

TEST_CASE("validation accepts the ample range and rejects the rest") {
    CHECK(validate(g2_facet(frac(1, 2))).ok);

    ValidationReport bad = validate(g2_facet(Rational(2)));
    CHECK_FALSE(bad.ok);
    REQUIRE(!bad.violations.empty());
    // the short-root pairing 6(1-t) evaluates to -6 at the upper endpoint
    CHECK(bad.violations[0].find("-6") != std::string::npos);

    SphericalData degenerate = g2_facet(Rational(0));
    ValidationReport rep = validate(degenerate);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violations[0].find("degenerate") != std::string::npos);

    SphericalData zero_sigma = g2_facet(frac(1, 2));
    zero_sigma.line.sigma = Weight::zero(2);
    CHECK_FALSE(validate(zero_sigma).ok);

    SphericalData mismatched = g2_facet(frac(1, 2));
    mismatched.line.chi = Weight({Rational(1)});
    CHECK_FALSE(validate(mismatched).ok);
}

TEST_CASE("restricted roots do not depend on the scale of the form") {
    SphericalData base = g2_facet(frac(1, 2));
    SphericalData scaled{base.root_system.scaled(frac(5, 3)), base.line, base.kind};
    CHECK(restricted_positive_roots(base) == restricted_positive_roots(scaled));

    SphericalData x1_scaled{x1().root_system.scaled(Rational(7)), x1().line, x1().kind};
    CHECK(restricted_positive_roots(x1_scaled).size() == 7);
}

TEST_CASE("family instantiation") {
    PolarizationFamily fam{g2(), Weight({Rational(12), Rational(6)}),
                           Weight({Rational(0), Rational(2)}), Rational(0), Rational(0),
                           Rational(1), Kind::non_horospherical};
    SphericalData at_half = instantiate(fam, frac(1, 2));
    CHECK(at_half.line.upper == frac(1, 2));
    CHECK(at_half.line.lower == Rational(0));
    CHECK(validate(at_half).ok);

    CHECK_THROWS_AS(instantiate(fam, Rational(1)), std::out_of_range);   // open range
    CHECK_THROWS_AS(instantiate(fam, Rational(0)), std::out_of_range);
    CHECK_THROWS_AS(instantiate(fam, Rational(-1)), std::out_of_range);
    CHECK_THROWS_AS(instantiate(fam, Rational(7)), std::out_of_range);
}

TEST_CASE("random parameters in every registered family validate") {
    std::mt19937_64 rng(20240812);
    for (const auto& entry : builtin_registry()) {
        if (!entry.doc.is_family())
            continue;
        PolarizationFamily fam = entry.doc.to_family();
        for (int i = 0; i < 100; ++i) {
            // dyadic parameters strictly inside the open range
            Rational u(static_cast<long>(rng() % 1023) + 1, 1024);
            Rational s = fam.range_low + u * (fam.range_high - fam.range_low);
            SphericalData data = instantiate(fam, s);
            CAPTURE(entry.name);
            CHECK(validate(data).ok);
        }
    }
}

TEST_SUITE_END();
