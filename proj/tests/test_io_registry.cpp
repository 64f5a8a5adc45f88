#include "kstab/io.hpp"

#include <doctest.h>

#include <stdexcept>

#include "kstab/registry.hpp"
#include "test_support.hpp"

using namespace kstab;
using namespace kstab::testing;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

namespace {

json sample_doc() {
    return json::parse(R"({
        "root_system": [{"type": "G2", "rank": 2, "scale": "1"}],
        "chi": ["12", "6"],
        "sigma": ["0", "2"],
        "interval": {"lower": "0", "upper": "1/2"},
        "kind": "non-horospherical"
    })");
}

} // namespace

TEST_CASE("documents round-trip through JSON") {
    for (const auto& entry : builtin_registry()) {
        CAPTURE(entry.name);
        InputDocument reparsed = parse_input_json(to_json(entry.doc));
        CHECK(reparsed == entry.doc);
    }
    InputDocument doc = parse_input_json(sample_doc());
    CHECK(parse_input_json(to_json(doc)) == doc);
}

TEST_CASE("parsing a concrete document") {
    InputDocument doc = parse_input_json(sample_doc());
    CHECK_FALSE(doc.is_family());
    SphericalData data = doc.to_data();
    CHECK(data.kind == Kind::non_horospherical);
    CHECK(data.line.upper == frac(1, 2));
    CHECK(data.root_system.positive_roots().size() == 6);
    CHECK_THROWS_AS(doc.to_family(), parse_error);
}

TEST_CASE("parsing a parameterized document") {
    json j = sample_doc();
    j["interval"] = {{"lower", "0"}, {"parameter", {{"name", "s"}, {"range", {"0", "1"}}}}};
    InputDocument doc = parse_input_json(j);
    CHECK(doc.is_family());
    PolarizationFamily fam = doc.to_family();
    CHECK(fam.range_high == Rational(1));
    CHECK_THROWS_AS(doc.to_data(), parse_error);
}

TEST_CASE("schema violations carry the field path") {
    auto expect_error_naming = [](json j, const std::string& field) {
        try {
            parse_input_json(j);
            FAIL_CHECK("expected parse_error for field ", field);
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find(field) != std::string::npos);
        }
    };

    json j = sample_doc();
    j["interval"] = {{"lower", "1"}, {"upper", "1/2"}};
    expect_error_naming(j, "interval");

    j = sample_doc();
    j["interval"] = {{"lower", "1"}, {"upper", "1"}};
    expect_error_naming(j, "interval");

    j = sample_doc();
    j["sigma"] = {"0", "0"};
    expect_error_naming(j, "sigma");

    j = sample_doc();
    j["chi"] = {"1", "2", "3"};
    expect_error_naming(j, "chi");

    j = sample_doc();
    j["root_system"][0]["type"] = "E6";
    expect_error_naming(j, "root_system[0].type");

    j = sample_doc();
    j["root_system"][0]["scale"] = "-1";
    expect_error_naming(j, "root_system[0].scale");

    j = sample_doc();
    j["chi"][0] = "12/";
    expect_error_naming(j, "chi[0]");

    j = sample_doc();
    j.erase("kind");
    expect_error_naming(j, "kind");

    j = sample_doc();
    j["interval"] = {{"lower", "0"}};
    expect_error_naming(j, "interval");

    j = sample_doc();
    j["interval"] = {{"lower", "0"},
                     {"upper", "1"},
                     {"parameter", {{"range", {"0", "1"}}}}};
    expect_error_naming(j, "interval");

    j = sample_doc();
    j["ke_weight"] = {"1", "2", "3"};
    expect_error_naming(j, "ke_weight");

    j = sample_doc();
    j["chi"] = "12";
    expect_error_naming(j, "chi");
}

TEST_CASE("report serialization shapes") {
    const RegistryEntry* e = find_entry("g2-facet");
    SphericalData data = instantiate(e->doc.to_family(), frac(1, 2));
    StabilityReport rep = check_stability(data);
    json j = to_json(rep);
    CHECK(j["verdict"] == "stable");
    CHECK(j["futaki"] == "2438361/104440");
    CHECK(j["P"].is_array());
    CHECK(j["P"][1] == "2592/5");
    CHECK(j["interval"]["upper"] == "1/2");

    ThresholdReport tr = stability_threshold(e->doc.to_family(), Rational::pow10(-5));
    json tj = to_json(tr);
    CHECK(tj["summary"] == "threshold_found");
    CHECK(tj["threshold"]["bracket"].is_array());
    std::string approx = tj["threshold"]["approx"].get<std::string>();
    CHECK(approx.substr(0, 7) == "0.97201");  // 0.97201...-0.97202... after rounding
    CHECK(polynomial_from_json(tj["condition_polynomial"], "R") == tr.condition);
}

TEST_CASE("registry lookups") {
    auto names = registry_names();
    REQUIRE(names.size() == 6);
    CHECK(names == std::vector<std::string>{"g2-facet", "x1", "x1-tilde", "x2", "x2-tilde",
                                            "torus-p1"});
    CHECK(find_entry("x2") != nullptr);
    CHECK(find_entry("nosuch") == nullptr);
}

TEST_CASE("every reference value in the registry verifies") {
    auto checks = verify_all();
    CHECK(checks.size() >= 30);
    for (const auto& c : checks) {
        CAPTURE(c.entry);
        CAPTURE(c.check);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

TEST_SUITE_END();
