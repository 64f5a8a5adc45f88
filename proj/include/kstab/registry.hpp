#ifndef KSTAB_REGISTRY_HPP
#define KSTAB_REGISTRY_HPP

#include "kstab/io.hpp"
#include "kstab/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kstab {

/// A reference value together with a short note on where it comes from.
template <typename T>
struct Expected {
    T value;
    std::string source;
};

/// Built-in example with its input document and the reference values the
/// verifier recomputes and compares exactly.
struct RegistryEntry {
    std::string name;
    std::string summary;
    InputDocument doc;

    std::optional<Expected<Polynomial>> P;
    std::optional<Expected<Polynomial>> Q;
    std::optional<Expected<Polynomial>> condition;
    std::vector<Expected<std::pair<Rational, Rational>>> condition_values;  // (s, R(s))
    std::optional<Expected<bool>> condition_positive_on_range;

    struct VerdictCase {
        std::optional<Rational> param;  // family parameter, absent for concrete data
        Verdict verdict;
        std::string source;
    };
    std::vector<VerdictCase> verdicts;
    std::optional<Expected<Rational>> futaki;

    struct Barycenter {
        Polynomial ell;                 // affine weight of the criterion
        Expected<Polynomial> factor;    // reference integrand divided by ell
        Expected<Rational> integral;    // exact value of the reference integral
        std::optional<Rational> ratio;  // expected constant P / factor
        std::string ratio_source;
    };
    std::optional<Barycenter> barycenter;

    std::optional<Expected<std::string>> threshold_decimal;  // leading digits of the root
    Rational threshold_tolerance;
};

const std::vector<RegistryEntry>& builtin_registry();
const RegistryEntry* find_entry(const std::string& name);
std::vector<std::string> registry_names();

struct VerifyCheck {
    std::string entry;
    std::string check;
    bool pass = false;
    std::string detail;
};

/// Recomputes every reference value of the entry and compares exactly
/// (thresholds at their stated tolerance).
std::vector<VerifyCheck> verify_entry(const RegistryEntry& entry);
std::vector<VerifyCheck> verify_all();

} // namespace kstab

#endif
