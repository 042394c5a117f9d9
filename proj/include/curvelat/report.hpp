#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curvelat/latthom.hpp"

namespace curvelat {

inline constexpr int kSchemaVersion = 1;

/// Reads a curve document:
///   {"truncation": nat, "branches": [{"x": "<poly>", "y": "<poly>"}, ...]}
/// Schema problems throw SchemaError naming the JSON pointer of the
/// offending value; polynomial syntax errors are reported the same way.
/// A missing or unreadable file throws Error with kind "IoError".
Curve load_curve(const std::string& path);
Curve parse_curve(const std::string& text);

/// A machine-readable result with a human rendering. Keys keep insertion
/// order, so equal inputs serialize to identical bytes.
class ReportDocument {
public:
    using Json = nlohmann::ordered_json;

    ReportDocument(std::string kind, Json data, std::string text);

    const std::string& kind() const noexcept { return kind_; }
    const Json& data() const noexcept { return data_; }
    /// Human rendering (the --format table output).
    const std::string& text() const noexcept { return text_; }

    std::string to_json() const;
    /// Throws SchemaError on a malformed or wrong-version document.
    static ReportDocument from_json(const std::string& json);

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;

private:
    std::string kind_;
    Json data_;
    std::string text_;
};

ReportDocument report_hilbert(const HilbertTable& t);
ReportDocument report_value(const LatticePoint& v, int h);
ReportDocument report_semigroup(const Semigroup& s);
ReportDocument report_series(const std::string& name, const BoxSeries& s,
                             const std::string& reflection = {});
ReportDocument report_homology(const std::vector<std::pair<LatticePoint, GradedGroup>>& groups);
ReportDocument report_invariants(const CurveInvariants& inv);

/// Inverses used by the round-trip tests and by consumers of the JSON.
HilbertTable table_from_report(const ReportDocument& doc);
BoxSeries series_from_report(const ReportDocument& doc);
std::vector<std::pair<LatticePoint, GradedGroup>> homology_from_report(const ReportDocument& doc);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    bool deep = false;  // boxes +4 instead of +2, doubled U-truncation
};

/// The identity suite on one curve. Never throws for mathematical
/// failures; an exception inside a check is reported as that check failing.
std::vector<CheckResult> run_verify(const Curve& c, const VerifyOptions& options = {});

ReportDocument report_verify(const std::vector<CheckResult>& results);

}  // namespace curvelat
