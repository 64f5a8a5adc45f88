#include "kstab/io.hpp"

#include <fstream>

namespace kstab {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw parse_error(path.empty() ? "document" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

Rational rational_from(const json& j, const std::string& path) {
    if (!j.is_string())
        throw parse_error(path, "rationals must be strings like \"p/q\"");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw parse_error(path, e.what());
    }
}

std::vector<Rational> rational_array(const json& j, const std::string& path) {
    if (!j.is_array())
        throw parse_error(path, "expected an array of rational strings");
    std::vector<Rational> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

json rational_strings(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

} // namespace

Polynomial polynomial_from_json(const json& j, const std::string& field) {
    return Polynomial(rational_array(j, field));
}

RootSystem InputDocument::build_root_system() const {
    return RootSystem::build(root_system);
}

SphericalData InputDocument::to_data() const {
    if (is_family())
        throw parse_error("interval", "parameterized document; a concrete upper endpoint "
                                      "(or --param) is required here");
    return SphericalData{build_root_system(),
                         MomentLine{Weight(chi), Weight(sigma), interval.lower, *interval.upper},
                         kind};
}

PolarizationFamily InputDocument::to_family() const {
    if (!is_family())
        throw parse_error("interval", "document is not parameterized; this operation needs "
                                      "an interval with a \"parameter\" range");
    return PolarizationFamily{build_root_system(), Weight(chi),    Weight(sigma),
                              interval.lower,      interval.parameter->low,
                              interval.parameter->high, kind};
}

InputDocument parse_input_json(const json& j) {
    InputDocument doc;

    const json& rsj = require_field(j, "root_system", "");
    if (!rsj.is_array() || rsj.empty())
        throw parse_error("root_system", "expected a non-empty array of factors");
    for (size_t i = 0; i < rsj.size(); ++i) {
        std::string path = "root_system[" + std::to_string(i) + "]";
        const json& f = rsj[i];
        const json& type = require_field(f, "type", path);
        if (!type.is_string())
            throw parse_error(join(path, "type"), "expected a string");
        CartanFactor factor;
        try {
            factor.type = cartan_type_from_string(type.get<std::string>());
        } catch (const std::exception& e) {
            throw parse_error(join(path, "type"), e.what());
        }
        const json& rank = require_field(f, "rank", path);
        if (!rank.is_number_integer())
            throw parse_error(join(path, "rank"), "expected an integer");
        factor.rank = rank.get<int>();
        factor.scale = f.contains("scale") ? rational_from(f["scale"], join(path, "scale"))
                                           : Rational(1);
        if (!(factor.scale > Rational(0)))
            throw parse_error(join(path, "scale"), "scale must be positive");
        doc.root_system.push_back(std::move(factor));
    }

    size_t rank;
    try {
        rank = doc.build_root_system().rank();
    } catch (const std::exception& e) {
        throw parse_error("root_system", e.what());
    }

    doc.chi = rational_array(require_field(j, "chi", ""), "chi");
    doc.sigma = rational_array(require_field(j, "sigma", ""), "sigma");
    if (doc.chi.size() != rank)
        throw parse_error("chi", "expected " + std::to_string(rank) + " coordinates, got " +
                                     std::to_string(doc.chi.size()));
    if (doc.sigma.size() != rank)
        throw parse_error("sigma", "expected " + std::to_string(rank) + " coordinates, got " +
                                       std::to_string(doc.sigma.size()));
    if (Weight(doc.sigma).is_zero())
        throw parse_error("sigma", "the direction sigma must be nonzero");

    const json& ij = require_field(j, "interval", "");
    doc.interval.lower = rational_from(require_field(ij, "lower", "interval"), "interval.lower");
    bool has_upper = ij.contains("upper");
    bool has_param = ij.contains("parameter");
    if (has_upper == has_param)
        throw parse_error("interval", "exactly one of \"upper\" and \"parameter\" is required");
    if (has_upper) {
        doc.interval.upper = rational_from(ij["upper"], "interval.upper");
        if (!(doc.interval.lower < *doc.interval.upper))
            throw parse_error("interval", "lower " + doc.interval.lower.str() +
                                              " must be strictly below upper " +
                                              doc.interval.upper->str());
    } else {
        const json& pj = ij["parameter"];
        ParameterSpec ps;
        if (pj.contains("name")) {
            if (!pj["name"].is_string())
                throw parse_error("interval.parameter.name", "expected a string");
            ps.name = pj["name"].get<std::string>();
        }
        const json& range = require_field(pj, "range", "interval.parameter");
        if (!range.is_array() || range.size() != 2)
            throw parse_error("interval.parameter.range", "expected [low, high]");
        ps.low = rational_from(range[0], "interval.parameter.range[0]");
        ps.high = rational_from(range[1], "interval.parameter.range[1]");
        if (!(ps.low < ps.high))
            throw parse_error("interval.parameter.range", "range is empty");
        if (!(doc.interval.lower < ps.high))
            throw parse_error("interval", "lower endpoint must lie below the parameter range");
        doc.interval.parameter = std::move(ps);
    }

    const json& kj = require_field(j, "kind", "");
    if (!kj.is_string())
        throw parse_error("kind", "expected a string");
    try {
        doc.kind = kind_from_string(kj.get<std::string>());
    } catch (const std::exception& e) {
        throw parse_error("kind", e.what());
    }

    if (j.contains("ke_weight")) {
        std::vector<Rational> c = rational_array(j["ke_weight"], "ke_weight");
        if (c.size() > 2)
            throw parse_error("ke_weight", "the barycenter weight must be affine: [c0, c1]");
        doc.ke_weight = Polynomial(std::move(c));
    }
    return doc;
}

InputDocument parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("file", "cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error("file", std::string("malformed JSON: ") + e.what());
    }
    return parse_input_json(j);
}

json to_json(const InputDocument& doc) {
    json rs = json::array();
    for (const auto& f : doc.root_system)
        rs.push_back({{"type", to_string(f.type)},
                      {"rank", f.rank},
                      {"scale", f.scale.str()}});
    json interval;
    interval["lower"] = doc.interval.lower.str();
    if (doc.interval.upper)
        interval["upper"] = doc.interval.upper->str();
    if (doc.interval.parameter)
        interval["parameter"] = {{"name", doc.interval.parameter->name},
                                 {"range", json::array({doc.interval.parameter->low.str(),
                                                        doc.interval.parameter->high.str()})}};
    json out{{"root_system", rs},
             {"chi", rational_strings(doc.chi)},
             {"sigma", rational_strings(doc.sigma)},
             {"interval", interval},
             {"kind", to_string(doc.kind)}};
    if (doc.ke_weight)
        out["ke_weight"] = to_json(*doc.ke_weight);
    return out;
}

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients())
        out.push_back(c.str());
    return out;
}

json to_json(const Bracketed& b, int decimal_digits) {
    return json{{"bracket", json::array({b.low.str(), b.high.str()})},
                {"approx", b.approx().decimal(decimal_digits)},
                {"exact", b.exact}};
}

json to_json(const PiecewiseLinear& g) {
    return json{{"breakpoints", rational_strings(g.breakpoints())},
                {"values", rational_strings(g.values())}};
}

json to_json(const StabilityReport& rep) {
    return json{{"verdict", to_string(rep.verdict)},
                {"kind", to_string(rep.kind)},
                {"futaki", rep.futaki.str()},
                {"futaki_reversed", rep.futaki_reversed.str()},
                {"a", rep.dh.a.str()},
                {"P", to_json(rep.dh.P)},
                {"Q", to_json(rep.dh.Q)},
                {"interval", {{"lower", rep.dh.lower.str()}, {"upper", rep.dh.upper.str()}}}};
}

json to_json(const ThresholdReport& rep) {
    json roots = json::array();
    for (const auto& r : rep.roots)
        roots.push_back(to_json(r));
    json components = json::array();
    for (const auto& [lo, hi] : rep.stable_components)
        components.push_back(json::array({to_json(lo), to_json(hi)}));
    json out{{"condition_polynomial", to_json(rep.condition)},
             {"summary", to_string(rep.summary)},
             {"roots", roots},
             {"stable_components", components}};
    if (rep.threshold)
        out["threshold"] = to_json(*rep.threshold);
    return out;
}

json to_json(const SignLocus& locus) {
    return json{{"t_minus", to_json(locus.t_minus)}, {"t_plus", to_json(locus.t_plus)}};
}

namespace {

json to_json(const MarginSample& s) {
    return json{{"g", to_json(s.g)}, {"L", s.value_L.str()}, {"norm", s.norm.str()}};
}

} // namespace

json to_json(const MarginReport& rep) {
    json out{{"verdict", to_string(rep.verdict)},
             {"requested", rep.requested},
             {"evaluated", rep.evaluated},
             {"skipped", rep.skipped}};
    if (rep.min_margin)
        out["min_margin"] = rep.min_margin->str();
    if (rep.worst)
        out["worst"] = to_json(*rep.worst);
    if (rep.destabilizer)
        out["destabilizer"] = to_json(*rep.destabilizer);
    return out;
}

} // namespace kstab
