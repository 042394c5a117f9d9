#include <doctest.h>

#include "curvelat/errors.hpp"
#include "support.hpp"

using namespace curvelat;

namespace {

std::string schema_message(const std::string& text) {
    try {
        parse_curve(text);
    } catch (const SchemaError& e) {
        return e.what();
    }
    return "no error";
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("curve documents") {
    const Curve c = parse_curve(R"({"truncation": 16, "branches": [{"x": "t", "y": "t^2"}]})");
    CHECK(c.r() == 1);
    CHECK(c.truncation() == 16);

    CHECK(starts_with(schema_message("[1]"), "SchemaError: /: "));
    CHECK(starts_with(schema_message("{"), "SchemaError: /: not valid JSON"));
    CHECK(starts_with(schema_message(R"({"branches": [{"x": "t", "y": "0"}]})"),
                      "SchemaError: /truncation: missing"));
    CHECK(starts_with(schema_message(R"({"truncation": 0, "branches": [{"x": "t", "y": "0"}]})"),
                      "SchemaError: /truncation:"));
    CHECK(starts_with(schema_message(R"({"truncation": 8, "branches": []})"),
                      "SchemaError: /branches:"));
    CHECK(starts_with(
        schema_message(R"({"truncation": 8, "branches": [{"x": "t", "y": "0"}, {"x": "t^^2", "y": "t"}]})"),
        "SchemaError: /branches/1/x:"));
    CHECK(starts_with(schema_message(R"({"truncation": 8, "branches": [{"x": "t", "y": 3}]})"),
                      "SchemaError: /branches/0/y:"));
    CHECK(starts_with(schema_message(R"({"truncation": 8, "branches": [{"x": "t", "z": "0"}]})"),
                      "SchemaError: /branches/0/z: unknown key"));
    CHECK(starts_with(schema_message(R"({"truncation": 8, "extra": 1, "branches": []})"),
                      "SchemaError: /extra: unknown key"));

    try {
        load_curve("/nonexistent/curve.json");
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.kind() == "IoError");
    }
}

TEST_CASE("every corpus file loads") {
    for (const auto& name : support::corpus_names()) {
        CAPTURE(name);
        CHECK_NOTHROW(support::corpus(name));
    }
}

TEST_CASE("reports survive a JSON round trip with stable bytes") {
    const Curve d5 = support::d5();
    const CurveInvariants inv = invariants(d5);
    const HilbertTable t = build_table(d5, {5, 5}, inv);

    const ReportDocument table = report_hilbert(t);
    const std::string bytes = table.to_json();
    CHECK(ReportDocument::from_json(bytes) == table);
    CHECK(ReportDocument::from_json(bytes).to_json() == bytes);
    CHECK(report_hilbert(build_table(d5, {5, 5}, inv)).to_json() == bytes);
    CHECK(table_from_report(ReportDocument::from_json(bytes)) == t);
    CHECK(table.data()["values"].size() == 36);

    const BoxSeries p = poincare_from_hilbert(t);
    const ReportDocument series = report_series("poincare", p);
    CHECK(series.text() == "1 + t1*t2^3\n");
    CHECK(series_from_report(ReportDocument::from_json(series.to_json())) == p);

    std::vector<std::pair<LatticePoint, GradedGroup>> groups;
    for (const auto& v : BoxIndex({3, 3}).points()) groups.emplace_back(v, grv_homology_direct(t, v));
    const ReportDocument hom = report_homology(groups);
    CHECK(homology_from_report(ReportDocument::from_json(hom.to_json())) == groups);

    const ReportDocument value = report_value({1, 3}, t({1, 3}));
    CHECK(value.text() == "2\n");
    const auto parsed = nlohmann::ordered_json::parse(value.to_json());
    CHECK(parsed["schema_version"] == kSchemaVersion);
    CHECK(parsed["kind"] == value.kind());

    CHECK_THROWS_AS(ReportDocument::from_json(R"({"schema_version": 99})"), SchemaError);
    CHECK_THROWS_AS(ReportDocument::from_json("nope"), SchemaError);
}

TEST_CASE("table rendering puts the origin at the lower left") {
    const HilbertTable t = build_table(support::d5(), {5, 5});
    const std::string text = report_hilbert(t).text();
    const auto last_row = text.rfind("0 1 2 3 4 5");
    const auto top_row = text.find("4 4 4 5 6 7");
    CHECK(last_row != std::string::npos);
    CHECK(top_row != std::string::npos);
    CHECK(top_row < last_row);
}

TEST_CASE("verify passes on the corpus") {
    for (const auto& name : support::corpus_names()) {
        CAPTURE(name);
        for (const CheckResult& r : run_verify(support::corpus(name))) {
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.passed);
        }
    }
}
