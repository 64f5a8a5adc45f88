#ifndef KSTAB_STABILITY_HPP
#define KSTAB_STABILITY_HPP

#include "kstab/piecewise_linear.hpp"
#include "kstab/polynomial.hpp"
#include "kstab/root_isolation.hpp"
#include "kstab/spherical_data.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kstab {

/// One root's contribution to the Duistermaat-Heckman product: the
/// affine pairing <alpha, chi + t sigma> and the normalizer <alpha, pi>
/// (pi = half-sum of positive roots).
struct DHFactor {
    Weight root;
    Polynomial pairing;
    Rational weight;
};

/// Duistermaat-Heckman data of a polarized datum: the density P, its
/// companion Q, and the constant a normalized so that L(1) = 0.
struct DHData {
    Polynomial P;
    Polynomial Q;
    Rational a;
    Rational lower;
    Rational upper;
    std::vector<DHFactor> factors;
};

/// P(t) = prod over restricted positive roots of <alpha, chi+t sigma> / <alpha, pi>.
/// The empty product is the constant 1.
Polynomial compute_P(const SphericalData& data);

/// Q(t) = (sum over alpha of <alpha, pi> / <alpha, chi+t sigma>) P(t),
/// expanded division-free as sum over alpha of prod over beta != alpha of
/// <beta, chi+t sigma> / <beta, pi>. The empty sum is 0.
Polynomial compute_Q(const SphericalData& data);

/// a = (P(lower) + P(upper) + 2 int Q) / (2 int P); the defining identity
/// L(1) = 0 is re-verified exactly after the division.
Rational compute_a(const Polynomial& P, const Polynomial& Q, const Rational& lower,
                   const Rational& upper);

/// Validates the datum and assembles P, Q, a and the factor list.
DHData make_dh_data(const SphericalData& data);

/// L(g) = g(s-)P(s-) + g(s+)P(s+) - int 2 g(t) (aP(t) - Q(t)) dt.
Rational L_functional(const PiecewiseLinear& g, const DHData& dh);

/// J(g) = int (g(t) - inf g) P(t) dt, the infimum taken over the interval.
Rational J_functional(const PiecewiseLinear& g, const Polynomial& P, const Rational& lower,
                      const Rational& upper);

/// inf over linear shifts l(t) = c*t of J(g + l). The infimum of the
/// convex piecewise-affine function c -> J(g + c*id) is attained where
/// -c equals one of the slopes of g, so it is an exact minimum over
/// finitely many candidates.
Rational horospherical_norm(const PiecewiseLinear& g, const DHData& dh);

/// L of the identity function g(t) = t, the Donaldson-Futaki invariant of
/// the unique equivariant special test configuration direction.
Rational futaki_linear(const DHData& dh);
Rational futaki_linear(const SphericalData& data);

enum class Verdict { stable, unstable, futaki_obstructed, semistable_boundary };

std::string to_string(Verdict v);

struct StabilityReport {
    Verdict verdict = Verdict::stable;
    Kind kind = Kind::non_horospherical;
    Rational futaki;           // L(id) for the contractual orientation of sigma
    Rational futaki_reversed;  // L(id) for the reversed orientation (diagnostic)
    DHData dh;
};

/// Non-horospherical: stable iff L(id) > 0, unstable iff < 0, and the
/// boundary L(id) = 0 is reported as semistable_boundary. Horospherical:
/// stable iff L(id) = 0 (Futaki character vanishes on the center),
/// futaki_obstructed otherwise. Invalid data raises validation_error.
StabilityReport check_stability(const SphericalData& data);

/// Condition polynomial along the polarization ray, with fixed lower
/// endpoint m = family.lower:
///
///   R(s) = (m P(m) + s P(s) + 2 int_m^s t Q) int_m^s P
///        - (P(m) + P(s) + 2 int_m^s Q) int_m^s t P,
///
/// which satisfies R(s) = L(id) * int_m^s P for the datum with upper
/// endpoint s, so the verdict at s is the sign of R(s).
Polynomial condition_polynomial(const PolarizationFamily& family);

/// Rational value pinned either exactly or by an isolating bracket.
struct Bracketed {
    Rational low;
    Rational high;
    bool exact = false;

    Rational approx() const { return exact ? low : (low + high) / Rational(2); }
    Rational width() const { return high - low; }
    static Bracketed exactly(const Rational& v) { return {v, v, true}; }
    static Bracketed from(const RootBracket& br) { return {br.low, br.high, br.exact}; }
};

enum class ThresholdSummary {
    degenerate_zero,      // R identically zero
    stable_everywhere,    // R > 0 on the whole open range
    unstable_everywhere,  // R < 0 on the whole open range
    threshold_found,      // R > 0 up to the first root
    unstable_at_lower_end // R < 0 immediately above the lower end
};

std::string to_string(ThresholdSummary s);

struct ThresholdReport {
    Polynomial condition;
    ThresholdSummary summary = ThresholdSummary::degenerate_zero;
    std::vector<Bracketed> roots;  // distinct roots of R inside the open range
    /// Maximal open sub-intervals of the range where R > 0.
    std::vector<std::pair<Bracketed, Bracketed>> stable_components;
    /// Right edge of the component adjacent to the lower end, when present.
    std::optional<Bracketed> threshold;
};

/// Isolates the roots of the condition polynomial in the parameter range
/// and reports the stable sub-ranges, brackets refined below `precision`.
ThresholdReport stability_threshold(const PolarizationFamily& family, const Rational& precision);

/// int ell(t) P(t) dt over the moment interval for an affine weight ell;
/// the Kaehler-Einstein criterion of the underlying Fano datum holds iff
/// the value is positive.
Rational ke_barycenter(const SphericalData& data, const Polynomial& ell);

/// Segment [t-, t+] inside [s-, s+] where aP - Q is non-negative.
struct SignLocus {
    Bracketed t_minus;
    Bracketed t_plus;
};

/// Certifies that {aP - Q >= 0} meets the open interval in a single
/// sub-segment and brackets its endpoints to `precision`. Raises
/// std::domain_error when aP - Q is negative on the whole segment, which
/// cannot happen for data with L(1) = 0.
SignLocus nonneg_locus(const DHData& dh, const Rational& precision);

struct MarginSample {
    PiecewiseLinear g;
    Rational value_L;
    Rational norm;
};

struct MarginReport {
    Verdict verdict = Verdict::stable;
    int requested = 0;
    int evaluated = 0;
    int skipped = 0;  // samples with zero norm (affine g)
    std::optional<Rational> min_margin;
    std::optional<MarginSample> worst;         // sample attaining the minimal margin
    std::optional<MarginSample> destabilizer;  // for non-stable input: a witness
};

/// Draws `count` random rational convex piecewise-linear test functions
/// (non-decreasing ones for non-horospherical data) and reports the
/// minimum of L(g)/|g| over the sample, |g| being J(g) or the
/// horospherical norm. Deterministic for a fixed seed. For non-stable
/// input the identity direction is reported as a destabilizing witness
/// instead of sampling.
MarginReport sample_uniform_check(const SphericalData& data, int count, uint64_t seed);

} // namespace kstab

#endif
