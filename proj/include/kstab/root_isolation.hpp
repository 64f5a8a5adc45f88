#ifndef KSTAB_ROOT_ISOLATION_HPP
#define KSTAB_ROOT_ISOLATION_HPP

#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"

#include <vector>

namespace kstab {

/// Open interval (low, high) containing exactly one real root of some
/// polynomial under discussion.
struct IsolatingInterval {
    Rational low;
    Rational high;
};

/// A located real root: either pinned exactly, or bracketed by an open
/// interval with a sign change.
struct RootBracket {
    Rational low;
    Rational high;
    bool exact = false;  // low == high == the root itself

    Rational approx() const { return exact ? low : (low + high) / Rational(2); }
    Rational width() const { return high - low; }
};

/// Signed-remainder (Sturm) chain of a polynomial; chain elements are
/// content-normalized, which preserves signs everywhere.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& p);
    /// Number of sign variations of the chain at x, zeros skipped.
    int variations(const Rational& x) const;
    const std::vector<Polynomial>& elements() const { return seq_; }

private:
    std::vector<Polynomial> seq_;
};

/// Number of distinct real roots of p in the half-open interval (a, b].
/// Multiple roots count once. Requires p nonzero and a < b.
int sturm_count(const Polynomial& p, const Rational& a, const Rational& b);

/// True iff p(t) > 0 for every t in the open interval (a, b). A root of
/// any multiplicity inside the interval, including a tangency of even
/// order, makes this false.
bool is_positive_on(const Polynomial& p, const Rational& a, const Rational& b);

/// Disjoint brackets for all distinct real roots of p in the open
/// interval (a, b), sorted in increasing order. Roots hit exactly during
/// the subdivision are returned with exact = true. Non-exact brackets
/// carry a sign change of p.square_free_part(); refine against that
/// polynomial, since p itself does not change sign at roots of even
/// multiplicity.
std::vector<RootBracket> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// Shrinks a bracket around a single sign-change root until its width is
/// below `precision`. The bracket must satisfy sign p(low) * sign p(high) < 0.
RootBracket refine_bracket(const Polynomial& p, const Rational& low, const Rational& high,
                           const Rational& precision);

/// isolate_roots followed by refinement below `precision`, with two extra
/// guarantees needed by sign-pattern scans: brackets lie strictly inside
/// (a, b) and consecutive brackets are strictly separated, so every gap
/// between roots contains a rational sample point.
std::vector<RootBracket> isolate_and_refine(const Polynomial& p, const Rational& a,
                                            const Rational& b, const Rational& precision);

/// Bisection refinement: returns a rational x with |x - root| < precision.
/// Throws std::invalid_argument when the bracket exhibits no sign change.
Rational refine_root(const Polynomial& p, const IsolatingInterval& bracket,
                     const Rational& precision);

} // namespace kstab

#endif
