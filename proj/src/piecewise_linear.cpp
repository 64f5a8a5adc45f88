#include "kstab/piecewise_linear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kstab {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.size() < 2)
        throw std::invalid_argument("piecewise-linear function needs at least two breakpoints");
    if (breaks_.size() != values_.size())
        throw std::invalid_argument("breakpoint and value counts differ");
    for (size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
}

PiecewiseLinear PiecewiseLinear::constant(const Rational& c, const Rational& lo, const Rational& hi) {
    return PiecewiseLinear({lo, hi}, {c, c});
}

PiecewiseLinear PiecewiseLinear::identity(const Rational& lo, const Rational& hi) {
    return PiecewiseLinear({lo, hi}, {lo, hi});
}

PiecewiseLinear PiecewiseLinear::from_slopes(const Rational& lo, const Rational& hi,
                                             const std::vector<Rational>& interior_breaks,
                                             const std::vector<Rational>& slopes,
                                             const Rational& value_at_lo) {
    if (slopes.size() != interior_breaks.size() + 1)
        throw std::invalid_argument("slope count must be one more than interior breakpoint count");
    std::vector<Rational> breaks;
    breaks.push_back(lo);
    breaks.insert(breaks.end(), interior_breaks.begin(), interior_breaks.end());
    breaks.push_back(hi);
    std::vector<Rational> values;
    values.push_back(value_at_lo);
    for (size_t i = 0; i + 1 < breaks.size(); ++i)
        values.push_back(values.back() + slopes[i] * (breaks[i + 1] - breaks[i]));
    return PiecewiseLinear(std::move(breaks), std::move(values));
}

Rational PiecewiseLinear::slope(size_t i) const {
    if (i + 1 >= breaks_.size())
        throw std::out_of_range("piece index out of range");
    return (values_[i + 1] - values_[i]) / (breaks_[i + 1] - breaks_[i]);
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
    if (x < lo() || x > hi())
        throw std::domain_error("evaluation outside the domain of the piecewise-linear function");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    size_t i = static_cast<size_t>(it - breaks_.begin());
    if (i >= breaks_.size()) i = breaks_.size() - 1;
    if (i == 0) i = 1;
    size_t piece = i - 1;
    return values_[piece] + slope(piece) * (x - breaks_[piece]);
}

bool PiecewiseLinear::is_convex() const {
    for (size_t i = 0; i + 1 < piece_count(); ++i)
        if (slope(i) > slope(i + 1))
            return false;
    return true;
}

bool PiecewiseLinear::is_non_decreasing() const {
    for (size_t i = 0; i < piece_count(); ++i)
        if (slope(i).sign() < 0)
            return false;
    return true;
}

bool PiecewiseLinear::is_constant() const {
    for (size_t i = 1; i < values_.size(); ++i)
        if (!(values_[i] == values_[0]))
            return false;
    return true;
}

Rational PiecewiseLinear::infimum() const {
    return *std::min_element(values_.begin(), values_.end());
}

PiecewiseLinear PiecewiseLinear::plus_constant(const Rational& c) const {
    std::vector<Rational> values = values_;
    for (auto& v : values) v += c;
    return PiecewiseLinear(breaks_, std::move(values));
}

PiecewiseLinear PiecewiseLinear::plus_linear(const Rational& c) const {
    std::vector<Rational> values = values_;
    for (size_t i = 0; i < values.size(); ++i)
        values[i] += c * breaks_[i];
    return PiecewiseLinear(breaks_, std::move(values));
}

std::string PiecewiseLinear::str() const {
    std::ostringstream os;
    os << "PL[";
    for (size_t i = 0; i < breaks_.size(); ++i) {
        if (i) os << ", ";
        os << "(" << breaks_[i].str() << ", " << values_[i].str() << ")";
    }
    os << "]";
    return os.str();
}

Rational integrate_pl_times_poly(const PiecewiseLinear& g, const Polynomial& p,
                                 const Rational& a, const Rational& b) {
    if (a > b)
        throw std::invalid_argument("integration bounds out of order");
    if (a < g.lo() || b > g.hi())
        throw std::domain_error("integration interval not contained in the domain of g");
    Rational total(0);
    for (size_t i = 0; i < g.piece_count(); ++i) {
        Rational left = std::max(a, g.breakpoints()[i]);
        Rational right = std::min(b, g.breakpoints()[i + 1]);
        if (!(left < right))
            continue;
        Rational m = g.slope(i);
        // affine restriction of g on the piece: v_i + m*(t - x_i)
        Polynomial piece = Polynomial::affine(g.values()[i] - m * g.breakpoints()[i], m);
        total += definite_integral(piece * p, left, right);
    }
    return total;
}

} // namespace kstab
