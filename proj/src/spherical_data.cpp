#include "kstab/spherical_data.hpp"

#include <sstream>

namespace kstab {

std::string to_string(Kind k) {
    return k == Kind::horospherical ? "horospherical" : "non-horospherical";
}

Kind kind_from_string(const std::string& s) {
    if (s == "horospherical")
        return Kind::horospherical;
    if (s == "non-horospherical" || s == "nonhorospherical")
        return Kind::non_horospherical;
    throw std::invalid_argument("unknown kind \"" + s +
                                "\" (expected \"horospherical\" or \"non-horospherical\")");
}

namespace {

std::string describe(const ValidationReport& rep) {
    std::ostringstream os;
    os << "invalid spherical data:";
    for (const auto& v : rep.violations)
        os << "\n  - " << v;
    return os.str();
}

} // namespace

validation_error::validation_error(ValidationReport rep)
    : std::runtime_error(describe(rep)), report_(std::move(rep)) {}

ValidationReport validate(const SphericalData& data) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    const RootSystem& rs = data.root_system;
    if (data.line.chi.size() != rs.rank())
        fail("chi has dimension " + std::to_string(data.line.chi.size()) +
             ", root system has rank " + std::to_string(rs.rank()));
    if (data.line.sigma.size() != rs.rank())
        fail("sigma has dimension " + std::to_string(data.line.sigma.size()) +
             ", root system has rank " + std::to_string(rs.rank()));
    if (data.line.sigma.is_zero())
        fail("sigma is zero");
    if (!(data.line.lower < data.line.upper))
        fail("degenerate interval: lower " + data.line.lower.str() + " >= upper " +
             data.line.upper.str());
    if (!rep.ok)
        return rep;

    for (const auto& alpha : rs.positive_roots()) {
        Polynomial f = pairing_polynomial(rs, alpha, data.line.chi, data.line.sigma);
        for (const Rational& endpoint : {data.line.lower, data.line.upper}) {
            Rational v = f(endpoint);
            if (v.sign() < 0)
                fail("root " + alpha.str() + " pairs to " + v.str() + " < 0 at t = " +
                     endpoint.str() + "; the segment leaves the positive Weyl chamber");
        }
    }
    return rep;
}

Polynomial pairing_polynomial(const RootSystem& rs, const Weight& alpha,
                              const Weight& chi, const Weight& sigma) {
    return Polynomial::affine(rs.pairing(alpha, chi), rs.pairing(alpha, sigma));
}

std::vector<Weight> restricted_positive_roots(const SphericalData& data) {
    std::vector<Weight> out;
    for (const auto& alpha : data.root_system.positive_roots()) {
        Polynomial f =
            pairing_polynomial(data.root_system, alpha, data.line.chi, data.line.sigma);
        if (!f.is_zero())
            out.push_back(alpha);
    }
    return out;
}

SphericalData instantiate(const PolarizationFamily& family, const Rational& s) {
    if (!(family.range_low < s && s < family.range_high))
        throw std::out_of_range("parameter " + s.str() + " outside the open range (" +
                                family.range_low.str() + ", " + family.range_high.str() + ")");
    SphericalData data{family.root_system,
                       MomentLine{family.chi, family.sigma, family.lower, s},
                       family.kind};
    ValidationReport rep = validate(data);
    if (!rep.ok)
        throw validation_error(std::move(rep));
    return data;
}

} // namespace kstab
