#ifndef KSTAB_PIECEWISE_LINEAR_HPP
#define KSTAB_PIECEWISE_LINEAR_HPP

#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"

#include <string>
#include <vector>

namespace kstab {

/// Continuous piecewise-linear function on a closed interval, given by
/// strictly increasing breakpoints (including both endpoints) and the
/// values attained there.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PiecewiseLinear constant(const Rational& c, const Rational& lo, const Rational& hi);
    /// g(t) = t.
    static PiecewiseLinear identity(const Rational& lo, const Rational& hi);
    /// Built from g(lo) = value_at_lo and per-piece slopes; interior_breaks
    /// must be strictly increasing and lie strictly inside (lo, hi), and
    /// slopes must have size interior_breaks.size() + 1.
    static PiecewiseLinear from_slopes(const Rational& lo, const Rational& hi,
                                       const std::vector<Rational>& interior_breaks,
                                       const std::vector<Rational>& slopes,
                                       const Rational& value_at_lo);

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& lo() const { return breaks_.front(); }
    const Rational& hi() const { return breaks_.back(); }
    size_t piece_count() const { return breaks_.size() - 1; }

    /// Slope of piece i (between breakpoints i and i+1).
    Rational slope(size_t i) const;

    /// Evaluation; x must lie in [lo, hi].
    Rational operator()(const Rational& x) const;

    bool is_convex() const;          // slopes non-decreasing
    bool is_non_decreasing() const;  // all slopes >= 0
    bool is_constant() const;

    /// Minimum value; attained at a breakpoint.
    Rational infimum() const;

    PiecewiseLinear plus_constant(const Rational& c) const;
    /// g(t) + c*t, on the same breakpoints.
    PiecewiseLinear plus_linear(const Rational& c) const;

    std::string str() const;

private:
    std::vector<Rational> breaks_;
    std::vector<Rational> values_;
};

/// Exact integral of g(t) * p(t) over [a, b], computed piece by piece.
/// [a, b] must be contained in the domain of g.
Rational integrate_pl_times_poly(const PiecewiseLinear& g, const Polynomial& p,
                                 const Rational& a, const Rational& b);

} // namespace kstab

#endif
