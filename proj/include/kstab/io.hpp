#ifndef KSTAB_IO_HPP
#define KSTAB_IO_HPP

#include "kstab/spherical_data.hpp"
#include "kstab/stability.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kstab {

/// Schema violation; the message names the offending field path.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct ParameterSpec {
    std::string name = "s";
    Rational low;
    Rational high;
    friend bool operator==(const ParameterSpec&, const ParameterSpec&) = default;
};

/// Either a concrete interval [lower, upper] or a parameterized one
/// [lower, s] with s ranging over an open interval.
struct IntervalSpec {
    Rational lower;
    std::optional<Rational> upper;
    std::optional<ParameterSpec> parameter;
    friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

/// Parsed input document describing a polarized datum or a polarization
/// family, plus an optional affine weight for the barycenter criterion.
struct InputDocument {
    std::vector<CartanFactor> root_system;
    std::vector<Rational> chi;
    std::vector<Rational> sigma;
    IntervalSpec interval;
    Kind kind = Kind::non_horospherical;
    std::optional<Polynomial> ke_weight;

    bool is_family() const { return interval.parameter.has_value(); }
    RootSystem build_root_system() const;
    SphericalData to_data() const;
    PolarizationFamily to_family() const;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Reads and validates a JSON document from disk. Schema violations are
/// reported as parse_error with the field path.
InputDocument parse_input(const std::string& path);
InputDocument parse_input_json(const nlohmann::json& j);

nlohmann::json to_json(const InputDocument& doc);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const Bracketed& b, int decimal_digits = 10);
nlohmann::json to_json(const PiecewiseLinear& g);
nlohmann::json to_json(const StabilityReport& rep);
nlohmann::json to_json(const ThresholdReport& rep);
nlohmann::json to_json(const SignLocus& locus);
nlohmann::json to_json(const MarginReport& rep);

/// Coefficient array (ascending degree) of rational strings.
Polynomial polynomial_from_json(const nlohmann::json& j, const std::string& field);

} // namespace kstab

#endif
