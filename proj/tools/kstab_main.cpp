#include "kstab/io.hpp"
#include "kstab/registry.hpp"
#include "kstab/stability.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace kstab;

constexpr int exit_ok = 0;
constexpr int exit_not_stable = 1;
constexpr int exit_input_error = 2;

std::string registry_name_list() {
    std::string out;
    for (const auto& n : registry_names()) {
        if (!out.empty())
            out += ", ";
        out += n;
    }
    return out;
}

/// Resolves a positional source: an existing file path, a file in the
/// directory named by KSTAB_REGISTRY, or a built-in registry name.
InputDocument resolve_source(const std::string& source) {
    namespace fs = std::filesystem;
    if (fs::exists(source))
        return parse_input(source);
    if (const char* dir = std::getenv("KSTAB_REGISTRY")) {
        fs::path candidate = fs::path(dir) / (source + ".json");
        if (fs::exists(candidate))
            return parse_input(candidate.string());
    }
    if (const RegistryEntry* entry = find_entry(source))
        return entry->doc;
    throw parse_error("source", "\"" + source + "\" is neither a file nor a registered " +
                                    "example (known: " + registry_name_list() + ")");
}

SphericalData concrete_data(const InputDocument& doc, const std::optional<Rational>& param) {
    if (doc.is_family()) {
        if (!param)
            throw parse_error("param", "parameterized document; pass --param p/q");
        return instantiate(doc.to_family(), *param);
    }
    if (param)
        throw parse_error("param", "document has a concrete interval; --param does not apply");
    return doc.to_data();
}

std::string factored_density(const DHData& dh) {
    // constant * product of primitive integer affine factors
    Rational constant(1);
    std::string factors;
    for (const auto& f : dh.factors) {
        Polynomial primitive = f.pairing;
        Rational content = primitive.content();
        int lead = primitive.coefficients().front().is_zero()
                       ? primitive.leading().sign()
                       : primitive.coefficients().front().sign();
        Rational scale = (lead < 0) ? -content : content;
        primitive = scale.reciprocal() * primitive;
        constant *= scale / f.weight;
        if (primitive.degree() > 0)
            factors += " * (" + primitive.str() + ")";
    }
    if (dh.factors.empty())
        return "1";
    return "(" + constant.str() + ")" + factors;
}

void print_check_human(const StabilityReport& rep) {
    std::cout << "interval: [" << rep.dh.lower << ", " << rep.dh.upper << "], kind: "
              << to_string(rep.kind) << "\n";
    std::cout << "P(t) = " << factored_density(rep.dh) << "\n";
    std::cout << "     = " << rep.dh.P.str() << "\n";
    std::cout << "  coefficients: " << to_json(rep.dh.P).dump() << "\n";
    std::cout << "Q(t) = " << rep.dh.Q.str() << "\n";
    std::cout << "  coefficients: " << to_json(rep.dh.Q).dump() << "\n";
    std::cout << "a = " << rep.dh.a << "\n";
    std::cout << "Futaki invariant L(id) = " << rep.futaki
              << "  (reversed orientation: " << rep.futaki_reversed << ")\n";
    std::cout << "verdict: " << to_string(rep.verdict) << "\n";
}

int verdict_exit_code(Verdict v) {
    return v == Verdict::stable ? exit_ok : exit_not_stable;
}

void emit_curve(const std::string& path, const Polynomial& R, const Rational& lo,
                const Rational& hi, int samples) {
    std::ofstream out(path);
    if (!out)
        throw parse_error("emit-curve", "cannot open \"" + path + "\" for writing");
    out << "s,R\n";
    for (int i = 0; i <= samples; ++i) {
        Rational s = lo + Rational(i, 1) * (hi - lo) / Rational(samples, 1);
        out << s.decimal(8) << "," << R(s).decimal(8) << "\n";
    }
}

int run_check(const std::string& source, const std::optional<std::string>& param, bool as_json,
              int samples, uint64_t seed) {
    InputDocument doc = resolve_source(source);
    std::optional<Rational> p;
    if (param)
        p = Rational::from_string(*param);
    SphericalData data = concrete_data(doc, p);
    StabilityReport rep = check_stability(data);

    std::optional<Polynomial> condition;
    if (doc.is_family())
        condition = condition_polynomial(doc.to_family());

    std::optional<MarginReport> margins;
    if (samples > 0)
        margins = sample_uniform_check(data, samples, seed);

    if (as_json) {
        nlohmann::json j = to_json(rep);
        if (condition)
            j["condition_polynomial"] = to_json(*condition);
        if (margins)
            j["sampling"] = to_json(*margins);
        std::cout << j.dump(2) << "\n";
    } else {
        print_check_human(rep);
        if (condition)
            std::cout << "condition polynomial along the family: R(s) = "
                      << condition->str('s') << "\n";
        if (margins) {
            std::cout << "sampling: " << margins->evaluated << " admissible convex test "
                      << "functions (" << margins->skipped << " skipped)\n";
            if (margins->min_margin)
                std::cout << "  min L(g)/|g| = " << *margins->min_margin << " = "
                          << margins->min_margin->decimal(8) << "\n";
            if (margins->destabilizer)
                std::cout << "  destabilizer: g = " << margins->destabilizer->g.str()
                          << " with L(g) = " << margins->destabilizer->value_L << "\n";
        }
    }
    return verdict_exit_code(rep.verdict);
}

int run_threshold(const std::string& source, const std::string& precision, bool as_json,
                  const std::optional<std::string>& curve_path) {
    InputDocument doc = resolve_source(source);
    if (!doc.is_family())
        throw parse_error("source", "the threshold command needs a parameterized document");
    PolarizationFamily fam = doc.to_family();
    ThresholdReport rep = stability_threshold(fam, Rational::from_string(precision));

    if (curve_path && !rep.condition.is_zero())
        emit_curve(*curve_path, rep.condition, fam.range_low, fam.range_high, 200);

    if (as_json) {
        std::cout << to_json(rep).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "condition polynomial R(s) = " << rep.condition.str('s') << "\n";
    std::cout << "  coefficients: " << to_json(rep.condition).dump() << "\n";
    std::cout << "parameter range: (" << fam.range_low << ", " << fam.range_high << ")\n";
    switch (rep.summary) {
        case ThresholdSummary::degenerate_zero:
            std::cout << "R is identically zero: the Futaki invariant vanishes along the "
                         "whole ray (horospherical-like family)\n";
            break;
        case ThresholdSummary::stable_everywhere:
            std::cout << "stable on the entire range\n";
            break;
        case ThresholdSummary::unstable_everywhere:
            std::cout << "unstable on the entire range\n";
            break;
        case ThresholdSummary::unstable_at_lower_end:
            std::cout << "unstable immediately above the lower end of the range\n";
            break;
        case ThresholdSummary::threshold_found:
            std::cout << "stable for s below the threshold\n";
            std::cout << "threshold s0 = " << rep.threshold->approx().decimal(7) << " in ["
                      << rep.threshold->low << ", " << rep.threshold->high << "]\n";
            break;
    }
    if (!rep.roots.empty()) {
        std::cout << "roots of R in the range:\n";
        for (const auto& r : rep.roots)
            std::cout << "  ~" << r.approx().decimal(7) << (r.exact ? " (exact)" : "") << "\n";
    }
    if (!rep.stable_components.empty()) {
        std::cout << "stable sub-ranges:\n";
        for (const auto& [lo, hi] : rep.stable_components)
            std::cout << "  (" << lo.approx().decimal(7) << ", " << hi.approx().decimal(7)
                      << ")\n";
    }
    return exit_ok;
}

int run_example(const std::string& name, bool list, bool verify_everything, bool as_json) {
    if (list) {
        if (as_json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& e : builtin_registry())
                j.push_back({{"name", e.name}, {"summary", e.summary}});
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& e : builtin_registry())
                std::cout << e.name << "  -  " << e.summary << "\n";
        }
        return exit_ok;
    }

    std::vector<VerifyCheck> checks;
    if (verify_everything) {
        checks = verify_all();
    } else {
        const RegistryEntry* entry = find_entry(name);
        if (!entry)
            throw parse_error("example", "unknown example \"" + name + "\" (known: " +
                                             registry_name_list() + ")");
        checks = verify_entry(*entry);
    }

    size_t failed = 0;
    if (as_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : checks) {
            j.push_back({{"entry", c.entry},
                         {"check", c.check},
                         {"pass", c.pass},
                         {"detail", c.detail}});
            failed += c.pass ? 0 : 1;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.entry << ": " << c.check;
            if (!c.pass || c.check.find("value") != std::string::npos ||
                c.check.find("constant") != std::string::npos)
                std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
            failed += c.pass ? 0 : 1;
        }
        std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    }
    return failed == 0 ? exit_ok : exit_not_stable;
}

PiecewiseLinear parse_pl(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error("g", "expected \"b0,b1,...:v0,v1,...\"");
    auto split = [](const std::string& part) {
        std::vector<Rational> out;
        size_t start = 0;
        while (start <= part.size()) {
            size_t comma = part.find(',', start);
            std::string token = part.substr(start, comma == std::string::npos
                                                       ? std::string::npos
                                                       : comma - start);
            out.push_back(Rational::from_string(token));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    };
    try {
        return PiecewiseLinear(split(text.substr(0, colon)), split(text.substr(colon + 1)));
    } catch (const std::exception& e) {
        throw parse_error("g", e.what());
    }
}

int run_functional(const std::string& source, const std::string& g_text,
                   const std::optional<std::string>& param, bool as_json) {
    InputDocument doc = resolve_source(source);
    std::optional<Rational> p;
    if (param)
        p = Rational::from_string(*param);
    SphericalData data = concrete_data(doc, p);
    PiecewiseLinear g = parse_pl(g_text);
    if (!(g.lo() == data.line.lower) || !(g.hi() == data.line.upper))
        throw parse_error("g", "breakpoints must span the moment interval [" +
                                   data.line.lower.str() + ", " + data.line.upper.str() + "]");
    if (!g.is_convex())
        throw parse_error("g", "the test function must be convex (non-decreasing slopes)");

    DHData dh = make_dh_data(data);
    Rational L = L_functional(g, dh);
    Rational J = J_functional(g, dh.P, dh.lower, dh.upper);
    std::optional<Rational> norm;
    if (data.kind == Kind::horospherical)
        norm = horospherical_norm(g, dh);

    if (as_json) {
        nlohmann::json j{{"g", to_json(g)}, {"L", L.str()}, {"J", J.str()}};
        if (norm)
            j["horospherical_norm"] = norm->str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "g = " << g.str() << "\n";
        std::cout << "L(g) = " << L << " = " << L.decimal(8) << "\n";
        std::cout << "J(g) = " << J << " = " << J.decimal(8) << "\n";
        if (norm)
            std::cout << "inf_c J(g + c t) = " << *norm << " = " << norm->decimal(8) << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact K-stability verifier for polarized rank-one spherical data"};
    app.require_subcommand(1);

    std::string source, param_text, precision = "1/100000", g_text, example_name;
    bool as_json = false, list_examples = false, verify_everything = false;
    int samples = 0;
    uint64_t seed = 1;
    std::optional<std::string> curve_path;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };

    CLI::App* check = app.add_subcommand("check", "decide K-stability of one polarized datum");
    check->add_option("source", source, "input file, registry name, or KSTAB_REGISTRY entry")
        ->required();
    check->add_option("--param", param_text, "upper endpoint for parameterized documents (p/q)");
    check->add_option("--samples", samples, "also sample this many random convex test functions");
    check->add_option("--seed", seed, "seed for the sampling check");
    add_json(check);

    CLI::App* threshold = app.add_subcommand("threshold", "stability threshold along a ray");
    threshold->add_option("source", source, "parameterized input document or registry name")
        ->required();
    threshold->add_option("-p,--precision", precision, "bracket width for refined roots (p/q)");
    threshold->add_option("--emit-curve", curve_path, "write (s, R(s)) samples as CSV");
    add_json(threshold);

    CLI::App* example = app.add_subcommand("example", "built-in example registry");
    example->add_option("name", example_name, "registry entry to verify");
    example->add_flag("--list", list_examples, "list registry entries");
    example->add_flag("--verify-all", verify_everything, "recompute and compare every entry");
    add_json(example);

    CLI::App* functional = app.add_subcommand("functional", "evaluate L and J on a test function");
    functional->add_option("source", source, "input file or registry name")->required();
    functional->add_option("--g", g_text, "piecewise-linear g as \"b0,b1,...:v0,v1,...\"")
        ->required();
    functional->add_option("--param", param_text, "upper endpoint for parameterized documents");
    add_json(functional);

    CLI11_PARSE(app, argc, argv);

    std::optional<std::string> param;
    if (!param_text.empty())
        param = param_text;

    try {
        if (check->parsed())
            return run_check(source, param, as_json, samples, seed);
        if (threshold->parsed())
            return run_threshold(source, precision, as_json, curve_path);
        if (example->parsed()) {
            if (!list_examples && !verify_everything && example_name.empty())
                throw parse_error("example", "pass a name, --list, or --verify-all");
            return run_example(example_name, list_examples, verify_everything, as_json);
        }
        if (functional->parsed())
            return run_functional(source, g_text, param, as_json);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const validation_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
