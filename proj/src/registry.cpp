#include "kstab/registry.hpp"

#include <sstream>
#include <stdexcept>

namespace kstab {

namespace {

Rational frac(long n, long d) { return Rational(n, d); }

Polynomial poly(std::vector<long> ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (long v : ascending)
        c.emplace_back(v);
    return Polynomial(std::move(c));
}

Polynomial monomial(long c, int k) { return Polynomial::monomial(Rational(c), k); }

std::vector<Rational> coords(std::vector<long> v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v)
        out.emplace_back(x);
    return out;
}

InputDocument make_doc(std::vector<CartanFactor> factors, std::vector<long> chi,
                       std::vector<long> sigma, const Rational& lower, IntervalSpec interval,
                       Kind kind) {
    InputDocument doc;
    doc.root_system = std::move(factors);
    doc.chi = coords(std::move(chi));
    doc.sigma = coords(std::move(sigma));
    interval.lower = lower;
    doc.interval = std::move(interval);
    doc.kind = kind;
    return doc;
}

IntervalSpec concrete(const Rational& upper) {
    IntervalSpec s;
    s.upper = upper;
    return s;
}

IntervalSpec parameterized(const Rational& low, const Rational& high) {
    IntervalSpec s;
    s.parameter = ParameterSpec{"s", low, high};
    return s;
}

std::vector<RegistryEntry> make_registry() {
    std::vector<RegistryEntry> reg;

    const CartanFactor g2_factor{CartanType::G2, 2, Rational(1)};
    const CartanFactor sl2_factor{CartanType::A, 1, frac(1, 2)};
    const CartanFactor f4_factor{CartanType::F4, 4, frac(1, 2)};
    const CartanFactor torus_factor{CartanType::Torus, 1, Rational(1)};

    // ---- g2-facet: divisor facet of the wonderful compactification of
    // G2/SO(4), Kaehler ray sE + 6 D1 with 0 < s < 1.
    {
        RegistryEntry e;
        e.name = "g2-facet";
        e.summary = "G2/SO(4) wonderful facet, Kaehler ray sE + 6D1, 0 < s < 1";
        e.doc = make_doc({g2_factor}, {12, 6}, {0, 2}, Rational(0),
                         parameterized(Rational(0), Rational(1)), Kind::non_horospherical);
        e.P = {frac(288, 5) * (monomial(1, 1) * poly({1, 0, -1}) * poly({9, 0, -1})),
               "closed-form density (288/5) t (1-t^2)(9-t^2) for this family"};
        e.Q = {frac(24, 5) * poly({27, 225, -90, -150, 15, 5}),
               "closed-form companion (24/5)(5t^5+15t^4-150t^3-90t^2+225t+27)"};
        e.condition = {frac(1152, 175) *
                           (monomial(1, 4) * poly({5103, 0, -9072, 1260, 3123, -240, -348, 20, 11})),
                       "closed-form condition polynomial along the ray"};
        e.condition_values.push_back(
            {{frac(1, 2), frac(7315083, 5600)}, "spot value R(1/2) > 0"});
        e.condition_values.push_back(
            {{frac(98, 100),
              Rational(mpz_class("-12097691278181901659043"),
                       mpz_class("47683715820312500000"))},
             "spot value R(98/100) < 0"});
        e.verdicts.push_back({frac(1, 2), Verdict::stable, "sign of R at s = 1/2"});
        e.verdicts.push_back({frac(98, 100), Verdict::unstable, "sign of R at s = 98/100"});
        e.threshold_decimal = {"0.97202", "isolated root of R between 1/2 and 1"};
        e.threshold_tolerance = Rational::pow10(-5);
        reg.push_back(std::move(e));
    }

    // ---- x1: Picard rank one PSL2 x G2 two-orbit variety, anticanonical
    // polarization, barycenter weight t.
    {
        RegistryEntry e;
        e.name = "x1";
        e.summary = "PSL2 x G2 two-orbit variety, anticanonical class";
        e.doc = make_doc({sl2_factor, g2_factor}, {1, 10, 6}, {1, 1, 0}, Rational(-1),
                         concrete(Rational(2)), Kind::non_horospherical);
        e.doc.ke_weight = poly({0, 1});
        RegistryEntry::Barycenter bc;
        bc.ell = poly({0, 1});
        bc.factor = {poly({1, 1}) * poly({1, 1}) * poly({2, -1}) * poly({8, -1}) *
                         poly({10, 1}) * poly({4, 1}),
                     "reference integrand (1+t)^2 (2-t)(8-t)(10+t)(4+t)"};
        bc.integral = {frac(120285, 56), "closed form of the reference barycenter integral"};
        bc.ratio = frac(1, 5);
        bc.ratio_source = "normalization constant obtained by enumerating the root pairings";
        e.barycenter = std::move(bc);
        e.verdicts.push_back({std::nullopt, Verdict::stable,
                              "positivity of the anticanonical barycenter integral"});
        reg.push_back(std::move(e));
    }

    // ---- x1-tilde: discoloration of x1, Kaehler ray sE + D2 with 0 < s < 1.
    {
        RegistryEntry e;
        e.name = "x1-tilde";
        e.summary = "discoloration of x1, Kaehler ray sE + D2, 0 < s < 1";
        e.doc = make_doc({sl2_factor, g2_factor}, {0, 3, 2}, {1, 1, 0}, Rational(0),
                         parameterized(Rational(0), Rational(1)), Kind::non_horospherical);
        e.P = {frac(1, 15) * (monomial(1, 2) * poly({9, 0, -10, 0, 1})),
               "closed-form density (t^2/15)(t^4-10t^2+9)"};
        e.Q = {frac(1, 30) * (monomial(1, 1) * poly({18, 135, -40, -90, 6, 3})),
               "closed-form companion (t/30)(3t^5+6t^4-90t^3-40t^2+135t+18)"};
        e.condition = {frac(1, 132300) *
                           (monomial(1, 6) * poly({2646, 0, -5292, 1764, 2135, -378, -266, 42, 9})),
                       "closed-form condition polynomial along the ray"};
        e.condition_positive_on_range = {true, "the condition holds on the whole ray"};
        e.verdicts.push_back({frac(1, 2), Verdict::stable, "sign of R at s = 1/2"});
        reg.push_back(std::move(e));
    }

    // ---- x2: Picard rank one F4 two-orbit variety, anticanonical
    // polarization, barycenter weight t - 5.
    {
        RegistryEntry e;
        e.name = "x2";
        e.summary = "F4 two-orbit variety, anticanonical class";
        e.doc = make_doc({f4_factor}, {16, 24, 32, 16}, {0, 1, 2, 1}, Rational(0),
                         concrete(Rational(8)), Kind::non_horospherical);
        e.doc.ke_weight = poly({-5, 1});
        RegistryEntry::Barycenter bc;
        bc.ell = poly({-5, 1});
        bc.factor = {monomial(1, 7) * poly({256, 0, -1}) * poly({256, 0, -1}) *
                         poly({64, 0, -1}) * poly({64, 0, -1}),
                     "reference integrand t^7 (256-t^2)^2 (64-t^2)^2"};
        bc.integral = {Rational(mpz_class("3672386428957884416"), mpz_class("153153")),
                       "closed form of the reference barycenter integral"};
        bc.ratio = Rational(mpz_class(1024), mpz_class("736745625"));
        bc.ratio_source = "normalization constant obtained by enumerating the root pairings";
        e.barycenter = std::move(bc);
        e.verdicts.push_back({std::nullopt, Verdict::stable,
                              "positivity of the anticanonical barycenter integral"});
        reg.push_back(std::move(e));
    }

    // ---- x2-tilde: discoloration of x2, Kaehler ray sE + D1 with 0 < s < 1.
    {
        RegistryEntry e;
        e.name = "x2-tilde";
        e.summary = "discoloration of x2, Kaehler ray sE + D1, 0 < s < 1";
        e.doc = make_doc({f4_factor}, {2, 3, 4, 2}, {0, 1, 2, 1}, Rational(0),
                         parameterized(Rational(0), Rational(1)), Kind::non_horospherical);
        Polynomial four_minus = poly({4, 0, -1});
        Polynomial one_minus = poly({1, 0, -1});
        // The factored forms usually quoted for this family are the
        // unnormalized product prod <a, chi+t sigma> and companion sum; the
        // half-sum normalizers contribute the extra constant 11787930000
        // (and a different quintic in Q). Closed forms below are the
        // normalized pair, cross-checked by an independent derivation in
        // the orthogonal realization of F4.
        e.P = {Rational(1, 1) / Rational(mpz_class("1508855040000"), 1) *
                   (monomial(1, 7) * four_minus * four_minus * one_minus * one_minus),
               "normalized density; the unnormalized product is "
               "(1/2^7) t^7 (4-t^2)^2 (1-t^2)^2"};
        e.Q = {Rational(1, 1) / Rational(mpz_class("3017710080000"), 1) *
                   (monomial(1, 6) * four_minus * one_minus *
                    poly({140, 480, -275, -440, 75, 56})),
               "normalized companion; the unnormalized sum is "
               "(1/2^8) t^6 (4-t^2)(1-t^2)(13t^5+22t^4-105t^3-110t^2+116t+88)"};
        e.condition_positive_on_range = {true,
                                         "the condition holds on the whole ray (no closed "
                                         "form; certified by root counting)"};
        e.verdicts.push_back({frac(1, 2), Verdict::stable, "sign of R at s = 1/2"});
        reg.push_back(std::move(e));
    }

    // ---- torus-p1: toric P^1 with the product polarization, the
    // degenerate horospherical baseline.
    {
        RegistryEntry e;
        e.name = "torus-p1";
        e.summary = "toric P^1 baseline: empty restricted root set";
        e.doc = make_doc({torus_factor}, {0}, {1}, Rational(0), concrete(Rational(1)),
                         Kind::horospherical);
        e.P = {poly({1}), "empty product"};
        e.Q = {Polynomial(), "empty sum"};
        e.futaki = {Rational(0), "vanishing Futaki character of the symmetric segment"};
        e.verdicts.push_back({std::nullopt, Verdict::stable, "Futaki character vanishes"});
        reg.push_back(std::move(e));
    }

    return reg;
}

} // namespace

const std::vector<RegistryEntry>& builtin_registry() {
    static const std::vector<RegistryEntry> reg = make_registry();
    return reg;
}

const RegistryEntry* find_entry(const std::string& name) {
    for (const auto& e : builtin_registry())
        if (e.name == name)
            return &e;
    return nullptr;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const auto& e : builtin_registry())
        names.push_back(e.name);
    return names;
}

namespace {

std::string poly_diff(const Polynomial& got, const Polynomial& expected) {
    std::ostringstream os;
    os << "computed " << got.str() << ", reference " << expected.str();
    return os.str();
}

} // namespace

std::vector<VerifyCheck> verify_entry(const RegistryEntry& e) {
    std::vector<VerifyCheck> out;
    auto add = [&](const std::string& check, bool pass, std::string detail = "") {
        out.push_back({e.name, check, pass, std::move(detail)});
    };

    try {
        std::optional<PolarizationFamily> fam;
        SphericalData rep_data = [&] {
            if (e.doc.is_family()) {
                fam = e.doc.to_family();
                return instantiate(*fam, (fam->range_low + fam->range_high) / Rational(2));
            }
            return e.doc.to_data();
        }();

        if (e.P) {
            Polynomial got = compute_P(rep_data);
            add("P", got == e.P->value, poly_diff(got, e.P->value));
        }
        if (e.Q) {
            Polynomial got = compute_Q(rep_data);
            add("Q", got == e.Q->value, poly_diff(got, e.Q->value));
        }

        std::optional<Polynomial> R;
        if (fam)
            R = condition_polynomial(*fam);
        if (e.condition) {
            add("condition polynomial", R && *R == e.condition->value,
                R ? poly_diff(*R, e.condition->value) : "no family");
        }
        for (const auto& cv : e.condition_values) {
            const auto& [s, expected] = cv.value;
            Rational got = (*R)(s);
            add("condition value at s = " + s.str(), got == expected,
                "computed " + got.str() + ", reference " + expected.str());
        }
        if (e.condition_positive_on_range) {
            bool got = is_positive_on(*R, fam->range_low, fam->range_high);
            add("condition positive on the range", got == e.condition_positive_on_range->value,
                got ? "positive" : "not positive");
        }

        for (const auto& vc : e.verdicts) {
            SphericalData data = vc.param ? instantiate(*fam, *vc.param) : e.doc.to_data();
            StabilityReport rep = check_stability(data);
            std::string label = vc.param ? "verdict at s = " + vc.param->str() : "verdict";
            add(label, rep.verdict == vc.verdict,
                "computed " + to_string(rep.verdict) + ", reference " + to_string(vc.verdict) +
                    " (L(id) = " + rep.futaki.str() + ")");
        }
        if (e.futaki) {
            Rational got = futaki_linear(e.doc.to_data());
            add("Futaki value", got == e.futaki->value,
                "computed " + got.str() + ", reference " + e.futaki->value.str());
        }

        if (e.barycenter) {
            const auto& bc = *e.barycenter;
            SphericalData data = e.doc.to_data();
            Rational ref = definite_integral(bc.ell * bc.factor.value, data.line.lower,
                                             data.line.upper);
            add("reference integral", ref == bc.integral.value,
                "computed " + ref.str() + ", reference " + bc.integral.value.str());

            Polynomial P = compute_P(data);
            auto [ratio_poly, rem] = Polynomial::divmod(P, bc.factor.value);
            bool constant_ratio =
                rem.is_zero() && ratio_poly.degree() == 0 && ratio_poly.coefficient(0).sign() > 0;
            add("density proportional to the reference integrand", constant_ratio,
                constant_ratio ? "ratio " + ratio_poly.coefficient(0).str() : "not proportional");
            if (constant_ratio) {
                Rational lambda = ratio_poly.coefficient(0);
                if (bc.ratio)
                    add("proportionality constant", lambda == *bc.ratio,
                        "computed " + lambda.str() + ", reference " + bc.ratio->str());
                Rational ke = ke_barycenter(data, bc.ell);
                add("barycenter value", ke == lambda * bc.integral.value && ke.sign() > 0,
                    "computed " + ke.str() + " (= ratio x reference), positive iff stable");
            }
        }

        if (e.threshold_decimal) {
            Rational pin = Rational::from_string(e.threshold_decimal->value);
            const Rational& tol = e.threshold_tolerance;
            bool certified = (*R)(pin - tol).sign() > 0 && (*R)(pin + tol).sign() < 0;
            add("threshold certified within tolerance", certified,
                "sign change of R across " + e.threshold_decimal->value + " +/- " + tol.str());
            ThresholdReport tr = stability_threshold(*fam, tol);
            bool found = tr.summary == ThresholdSummary::threshold_found && tr.threshold;
            Rational err = found ? (tr.threshold->approx() - pin).abs() : Rational(0);
            add("threshold report", found && err < Rational(2) * tol,
                found ? "refined to " + tr.threshold->approx().decimal(7) : "no threshold found");
        }
    } catch (const std::exception& ex) {
        add("entry evaluation", false, ex.what());
    }
    return out;
}

std::vector<VerifyCheck> verify_all() {
    std::vector<VerifyCheck> out;
    for (const auto& e : builtin_registry()) {
        auto checks = verify_entry(e);
        out.insert(out.end(), checks.begin(), checks.end());
    }
    return out;
}

} // namespace kstab
