#ifndef KSTAB_SPHERICAL_DATA_HPP
#define KSTAB_SPHERICAL_DATA_HPP

#include "kstab/polynomial.hpp"
#include "kstab/root_system.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kstab {

/// Moment segment {chi + t*sigma | t in [lower, upper]} in weight space.
struct MomentLine {
    Weight chi;
    Weight sigma;
    Rational lower;
    Rational upper;
};

enum class Kind { horospherical, non_horospherical };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Raised when an operation requires valid data and the validation
/// report carries violations.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(ValidationReport rep);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Polarized rank-one spherical variety: ambient root system, moment
/// segment, and the horospherical/non-horospherical kind flag.
///
/// For non-horospherical data the direction sigma is expected to be the
/// spherical root with its standard orientation, so that the unique
/// equivariant special test configuration corresponds to the
/// non-decreasing identity test function.
struct SphericalData {
    RootSystem root_system;
    MomentLine line;
    Kind kind = Kind::non_horospherical;
};

/// Endpoint check that the whole segment lies in the positive Weyl
/// chamber: <alpha, chi + t sigma> >= 0 at both endpoints for every
/// positive root alpha (sufficient since the pairing is affine in t).
/// Violations are reported, not thrown.
ValidationReport validate(const SphericalData& data);

/// The positive roots whose pairing with chi + t*sigma is not the zero
/// function of t; roots with constant nonzero pairing are included.
std::vector<Weight> restricted_positive_roots(const SphericalData& data);

/// Pairing <alpha, chi + t*sigma> as an affine polynomial in t.
Polynomial pairing_polynomial(const RootSystem& rs, const Weight& alpha,
                              const Weight& chi, const Weight& sigma);

/// One-parameter ray of polarizations: chi, sigma and the lower endpoint
/// are fixed, the upper endpoint ranges over the open interval
/// (range_low, range_high).
struct PolarizationFamily {
    RootSystem root_system;
    Weight chi;
    Weight sigma;
    Rational lower;
    Rational range_low;
    Rational range_high;
    Kind kind = Kind::non_horospherical;
};

/// Concrete datum with upper endpoint s; s must lie strictly inside the
/// parameter range and the result must validate.
SphericalData instantiate(const PolarizationFamily& family, const Rational& s);

} // namespace kstab

#endif
