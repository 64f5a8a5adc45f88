#include "kstab/stability.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace kstab {

namespace {

std::vector<DHFactor> dh_factors(const RootSystem& rs, const Weight& chi, const Weight& sigma) {
    std::vector<DHFactor> factors;
    const Weight& half_sum = rs.half_sum_positive_roots();
    for (const auto& alpha : rs.positive_roots()) {
        Polynomial f = pairing_polynomial(rs, alpha, chi, sigma);
        if (f.is_zero())
            continue;
        Rational w = rs.pairing(alpha, half_sum);
        if (!(w > Rational(0)))
            throw std::logic_error("positive root pairs non-positively with the half-sum");
        factors.push_back({alpha, std::move(f), std::move(w)});
    }
    return factors;
}

Polynomial product_P(const std::vector<DHFactor>& factors) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (const auto& f : factors)
        p = p * (f.weight.reciprocal() * f.pairing);
    return p;
}

Polynomial sum_Q(const std::vector<DHFactor>& factors) {
    if (factors.empty())
        return Polynomial();
    size_t n = factors.size();
    std::vector<Polynomial> normalized;
    normalized.reserve(n);
    for (const auto& f : factors)
        normalized.push_back(f.weight.reciprocal() * f.pairing);
    // prefix[i] = product of normalized[0..i), suffix[i] = product of [i..n)
    std::vector<Polynomial> prefix(n + 1), suffix(n + 1);
    prefix[0] = Polynomial::constant(Rational(1));
    suffix[n] = Polynomial::constant(Rational(1));
    for (size_t i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] * normalized[i];
    for (size_t i = n; i > 0; --i)
        suffix[i - 1] = normalized[i - 1] * suffix[i];
    Polynomial q;
    for (size_t i = 0; i < n; ++i)
        q += prefix[i] * suffix[i + 1];
    return q;
}

Rational infimum_on(const PiecewiseLinear& g, const Rational& lo, const Rational& hi) {
    Rational best = g(lo);
    Rational at_hi = g(hi);
    if (at_hi < best)
        best = at_hi;
    for (size_t i = 0; i < g.breakpoints().size(); ++i) {
        const Rational& x = g.breakpoints()[i];
        if (lo < x && x < hi && g.values()[i] < best)
            best = g.values()[i];
    }
    return best;
}

void require_domain(const PiecewiseLinear& g, const Rational& lo, const Rational& hi) {
    if (g.lo() > lo || g.hi() < hi)
        throw std::domain_error("test function is not defined on the whole moment interval");
}

} // namespace

Polynomial compute_P(const SphericalData& data) {
    return product_P(dh_factors(data.root_system, data.line.chi, data.line.sigma));
}

Polynomial compute_Q(const SphericalData& data) {
    return sum_Q(dh_factors(data.root_system, data.line.chi, data.line.sigma));
}

Rational compute_a(const Polynomial& P, const Polynomial& Q, const Rational& lower,
                   const Rational& upper) {
    Rational int_P = definite_integral(P, lower, upper);
    if (!(int_P > Rational(0)))
        throw std::domain_error("degenerate data: the density P has non-positive mass");
    Rational int_Q = definite_integral(Q, lower, upper);
    Rational a = (P(lower) + P(upper) + Rational(2) * int_Q) / (Rational(2) * int_P);
    Rational check = P(lower) + P(upper) - Rational(2) * (a * int_P - int_Q);
    if (!check.is_zero())
        throw std::logic_error("normalization failed: L(1) != 0");
    return a;
}

DHData make_dh_data(const SphericalData& data) {
    ValidationReport rep = validate(data);
    if (!rep.ok)
        throw validation_error(std::move(rep));
    DHData dh;
    dh.factors = dh_factors(data.root_system, data.line.chi, data.line.sigma);
    dh.P = product_P(dh.factors);
    dh.Q = sum_Q(dh.factors);
    dh.lower = data.line.lower;
    dh.upper = data.line.upper;
    dh.a = compute_a(dh.P, dh.Q, dh.lower, dh.upper);
    if (!is_positive_on(dh.P, dh.lower, dh.upper))
        throw std::logic_error("P is not strictly positive inside the moment interval");
    if (!dh.Q.is_zero() && !is_positive_on(dh.Q, dh.lower, dh.upper))
        throw std::logic_error("Q is not strictly positive inside the moment interval");
    return dh;
}

Rational L_functional(const PiecewiseLinear& g, const DHData& dh) {
    require_domain(g, dh.lower, dh.upper);
    Polynomial density = dh.a * dh.P - dh.Q;
    return g(dh.lower) * dh.P(dh.lower) + g(dh.upper) * dh.P(dh.upper) -
           Rational(2) * integrate_pl_times_poly(g, density, dh.lower, dh.upper);
}

Rational J_functional(const PiecewiseLinear& g, const Polynomial& P, const Rational& lower,
                      const Rational& upper) {
    require_domain(g, lower, upper);
    Rational inf = infimum_on(g, lower, upper);
    return integrate_pl_times_poly(g.plus_constant(-inf), P, lower, upper);
}

Rational horospherical_norm(const PiecewiseLinear& g, const DHData& dh) {
    require_domain(g, dh.lower, dh.upper);
    std::set<Rational> candidates;
    for (size_t i = 0; i < g.piece_count(); ++i)
        candidates.insert(-g.slope(i));
    std::optional<Rational> best;
    for (const auto& c : candidates) {
        Rational v = J_functional(g.plus_linear(c), dh.P, dh.lower, dh.upper);
        if (!best || v < *best)
            best = v;
    }
    return *best;
}

Rational futaki_linear(const DHData& dh) {
    return L_functional(PiecewiseLinear::identity(dh.lower, dh.upper), dh);
}

Rational futaki_linear(const SphericalData& data) {
    return futaki_linear(make_dh_data(data));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::unstable: return "unstable";
        case Verdict::futaki_obstructed: return "futaki_obstructed";
        case Verdict::semistable_boundary: return "semistable_boundary";
    }
    return "?";
}

StabilityReport check_stability(const SphericalData& data) {
    StabilityReport rep;
    rep.kind = data.kind;
    rep.dh = make_dh_data(data);
    rep.futaki = futaki_linear(rep.dh);
    rep.futaki_reversed = -rep.futaki;
    int s = rep.futaki.sign();
    if (data.kind == Kind::horospherical)
        rep.verdict = (s == 0) ? Verdict::stable : Verdict::futaki_obstructed;
    else
        rep.verdict = (s > 0)   ? Verdict::stable
                    : (s < 0)   ? Verdict::unstable
                                : Verdict::semistable_boundary;
    return rep;
}

Polynomial condition_polynomial(const PolarizationFamily& family) {
    // probe the family at the middle of its range; instantiation validates
    instantiate(family, (family.range_low + family.range_high) / Rational(2));

    auto factors = dh_factors(family.root_system, family.chi, family.sigma);
    Polynomial P = product_P(factors);
    Polynomial Q = sum_Q(factors);
    const Rational& m = family.lower;

    auto running_integral = [&m](const Polynomial& p) {
        Polynomial A = p.antiderivative();
        return A - Polynomial::constant(A(m));
    };
    Polynomial F = running_integral(P);            // int_m^s P
    Polynomial G = running_integral(P.times_x());  // int_m^s t P
    Polynomial H = running_integral(Q);            // int_m^s Q
    Polynomial K = running_integral(Q.times_x());  // int_m^s t Q

    Polynomial left = Polynomial::constant(m * P(m)) + P.times_x() + Rational(2) * K;
    Polynomial right = Polynomial::constant(P(m)) + P + Rational(2) * H;
    return left * F - right * G;
}

std::string to_string(ThresholdSummary s) {
    switch (s) {
        case ThresholdSummary::degenerate_zero: return "degenerate_zero";
        case ThresholdSummary::stable_everywhere: return "stable_everywhere";
        case ThresholdSummary::unstable_everywhere: return "unstable_everywhere";
        case ThresholdSummary::threshold_found: return "threshold_found";
        case ThresholdSummary::unstable_at_lower_end: return "unstable_at_lower_end";
    }
    return "?";
}

namespace {

// Signs of R on the gaps between consecutive root brackets (and between
// the range ends and the outermost brackets). isolate_and_refine keeps
// brackets strictly inside (lo, hi) and strictly separated, so every gap
// has a rational interior point and a constant sign.
std::vector<int> gap_signs(const Polynomial& R, const std::vector<RootBracket>& roots,
                           const Rational& lo, const Rational& hi) {
    std::vector<int> signs;
    for (size_t i = 0; i <= roots.size(); ++i) {
        Rational right = (i < roots.size()) ? roots[i].low : hi;
        Rational left = (i == 0) ? lo : roots[i - 1].high;
        int s = R((left + right) / Rational(2)).sign();
        if (s == 0)
            throw std::logic_error("gap sample hit a root despite isolation");
        signs.push_back(s);
    }
    return signs;
}

} // namespace

ThresholdReport stability_threshold(const PolarizationFamily& family, const Rational& precision) {
    if (!(precision > Rational(0)))
        throw std::invalid_argument("precision must be positive");
    ThresholdReport report;
    report.condition = condition_polynomial(family);
    if (report.condition.is_zero()) {
        report.summary = ThresholdSummary::degenerate_zero;
        return report;
    }
    const Rational& lo = family.range_low;
    const Rational& hi = family.range_high;
    auto roots = isolate_and_refine(report.condition, lo, hi, precision);
    for (const auto& br : roots)
        report.roots.push_back(Bracketed::from(br));

    std::vector<int> signs = gap_signs(report.condition, roots, lo, hi);
    for (size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] > 0) {
            Bracketed left = (i == 0) ? Bracketed::exactly(lo) : report.roots[i - 1];
            Bracketed right = (i == roots.size()) ? Bracketed::exactly(hi) : report.roots[i];
            report.stable_components.emplace_back(left, right);
        }
    }

    if (roots.empty()) {
        report.summary = signs[0] > 0 ? ThresholdSummary::stable_everywhere
                                      : ThresholdSummary::unstable_everywhere;
        return report;
    }
    if (signs[0] > 0) {
        report.summary = ThresholdSummary::threshold_found;
        report.threshold = report.roots[0];
    } else {
        report.summary = ThresholdSummary::unstable_at_lower_end;
    }
    return report;
}

Rational ke_barycenter(const SphericalData& data, const Polynomial& ell) {
    if (ell.degree() > 1)
        throw std::invalid_argument("barycenter weight must be affine");
    ValidationReport rep = validate(data);
    if (!rep.ok)
        throw validation_error(std::move(rep));
    Polynomial P = compute_P(data);
    return definite_integral(ell * P, data.line.lower, data.line.upper);
}

SignLocus nonneg_locus(const DHData& dh, const Rational& precision) {
    if (!(precision > Rational(0)))
        throw std::invalid_argument("precision must be positive");
    Polynomial D = dh.a * dh.P - dh.Q;
    if (D.is_zero())
        return {Bracketed::exactly(dh.lower), Bracketed::exactly(dh.upper)};

    auto roots = isolate_and_refine(D, dh.lower, dh.upper, precision);
    std::vector<int> signs = gap_signs(D, roots, dh.lower, dh.upper);

    int first_pos = -1, last_pos = -1;
    for (size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] > 0) {
            if (first_pos < 0)
                first_pos = static_cast<int>(i);
            last_pos = static_cast<int>(i);
        }
    }
    if (first_pos < 0)
        throw std::domain_error(
            "aP - Q is negative across the segment; inconsistent with L(1) = 0");
    // the non-negative locus must be a single sub-segment: positive gaps
    // are consecutive and no tangency root sits between negative gaps
    for (int i = first_pos; i <= last_pos; ++i)
        if (signs[static_cast<size_t>(i)] < 0)
            throw std::logic_error("non-negative locus of aP - Q is disconnected");
    for (size_t j = 0; j < roots.size(); ++j)
        if (signs[j] < 0 && signs[j + 1] < 0)
            throw std::logic_error("isolated tangency of aP - Q outside the main segment");

    SignLocus locus;
    locus.t_minus = (first_pos == 0) ? Bracketed::exactly(dh.lower)
                                     : Bracketed::from(roots[static_cast<size_t>(first_pos - 1)]);
    locus.t_plus = (last_pos == static_cast<int>(roots.size()))
                       ? Bracketed::exactly(dh.upper)
                       : Bracketed::from(roots[static_cast<size_t>(last_pos)]);
    return locus;
}

namespace {

PiecewiseLinear random_convex_pl(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                                 bool non_decreasing) {
    // up to 5 interior breakpoints on a 64-slot grid; slopes in eighths
    // from a bounded grid, sorted so the function is convex
    size_t nb = static_cast<size_t>(rng() % 6);
    std::set<int> picks;
    while (picks.size() < nb)
        picks.insert(1 + static_cast<int>(rng() % 63));
    Rational span = hi - lo;
    std::vector<Rational> breaks;
    for (int j : picks)
        breaks.push_back(lo + Rational(j, 64) * span);
    std::vector<Rational> slopes;
    for (size_t i = 0; i <= nb; ++i) {
        long v = non_decreasing ? static_cast<long>(rng() % 65)
                                : static_cast<long>(rng() % 129) - 64;
        slopes.emplace_back(v, 8L);
    }
    std::sort(slopes.begin(), slopes.end());
    return PiecewiseLinear::from_slopes(lo, hi, breaks, slopes, Rational(0));
}

} // namespace

MarginReport sample_uniform_check(const SphericalData& data, int count, uint64_t seed) {
    StabilityReport stab = check_stability(data);
    MarginReport report;
    report.verdict = stab.verdict;
    report.requested = count;

    const DHData& dh = stab.dh;
    if (stab.verdict != Verdict::stable) {
        // the identity direction witnesses the failure: L(id) <= 0 for
        // non-horospherical data, L(id) != 0 with zero norm for
        // horospherical data
        PiecewiseLinear id = PiecewiseLinear::identity(dh.lower, dh.upper);
        bool horo = data.kind == Kind::horospherical;
        Rational value = stab.futaki;
        if (horo && value.sign() > 0) {
            id = id.plus_linear(Rational(-2));  // reversed orientation, still linear
            value = L_functional(id, dh);
        }
        Rational norm = horo ? horospherical_norm(id, dh)
                             : J_functional(id, dh.P, dh.lower, dh.upper);
        report.destabilizer = MarginSample{std::move(id), std::move(value), std::move(norm)};
        return report;
    }

    bool horo = data.kind == Kind::horospherical;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        PiecewiseLinear g = random_convex_pl(rng, dh.lower, dh.upper, !horo);
        Rational norm = horo ? horospherical_norm(g, dh)
                             : J_functional(g, dh.P, dh.lower, dh.upper);
        if (norm.is_zero()) {
            ++report.skipped;
            continue;
        }
        Rational value = L_functional(g, dh);
        Rational margin = value / norm;
        ++report.evaluated;
        if (!report.min_margin || margin < *report.min_margin) {
            report.min_margin = margin;
            report.worst = MarginSample{std::move(g), std::move(value), std::move(norm)};
        }
    }
    return report;
}

} // namespace kstab
