#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "curvelat/errors.hpp"
#include "curvelat/report.hpp"

using namespace curvelat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LatticePoint parse_point(const std::string& text, int r, const std::string& option) {
    LatticePoint v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int x = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            v.push_back(x);
        } catch (const std::exception&) {
            throw UsageError(option + ": '" + text + "' is not a comma-separated list of integers");
        }
    }
    if (static_cast<int>(v.size()) != r) {
        throw UsageError(option + ": expected " + std::to_string(r) + " coordinates, got " +
                         std::to_string(v.size()));
    }
    for (int x : v)
        if (x < 0) throw UsageError(option + ": coordinates must be non-negative");
    return v;
}

LatticePoint componentwise_max(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of plane curve singularities: Hilbert functions, Poincaré series, "
                 "lattice homology"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string path;
    std::string box_text, at_text, series_kind;
    bool deep = false;

    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    auto curve_arg = [&](CLI::App* sub) {
        sub->add_option("curve", path, "Curve file (JSON)")->required();
    };

    auto* hilbert = app.add_subcommand("hilbert", "Print the Hilbert function on a box");
    hilbert->add_option("--box", box_text, "Box corner V1,...,Vr (default: conductor + 2)");
    curve_arg(hilbert);

    auto* value = app.add_subcommand("value", "Print h(v)");
    value->add_option("--at", at_text, "Lattice point v1,...,vr")->required();
    curve_arg(value);

    auto* semigroup_cmd = app.add_subcommand("semigroup", "Print the value semigroup and conductor");
    semigroup_cmd->add_option("--box", box_text, "Box corner (default: conductor + 2)");
    curve_arg(semigroup_cmd);

    auto* series = app.add_subcommand("series", "Print a generating series");
    series->add_option("kind", series_kind, "poincare, motivic or alexander")
        ->required()
        ->check(CLI::IsMember({"poincare", "motivic", "alexander"}));
    series->add_option("--box", box_text, "Box corner for the Poincaré series");
    curve_arg(series);

    auto* homology = app.add_subcommand("homology", "Print the lattice homology HL^-");
    auto* at_opt = homology->add_option("--at", at_text, "Lattice point");
    auto* box_opt = homology->add_option("--box", box_text, "Every point of the box [0, V]");
    at_opt->excludes(box_opt);
    curve_arg(homology);

    auto* inv_cmd = app.add_subcommand("invariants", "Print delta, mu, conductor, intersections");
    curve_arg(inv_cmd);

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_flag("--deep", deep, "Larger boxes and U-truncations");
    curve_arg(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Curve curve = load_curve(path);
        const CurveInvariants inv = invariants(curve);
        const int r = curve.r();
        const LatticePoint default_box = offset(inv.conductor, 2);
        auto box_or_default = [&] {
            return box_text.empty() ? default_box : parse_point(box_text, r, "--box");
        };

        std::optional<ReportDocument> doc;
        int status = 0;
        if (*hilbert) {
            doc = report_hilbert(build_table(curve, box_or_default(), inv));
        } else if (*value) {
            const LatticePoint v = parse_point(at_text, r, "--at");
            const HilbertTable t = build_table(curve, componentwise_max(v, inv.conductor), inv);
            doc = report_value(v, t(v));
        } else if (*semigroup_cmd) {
            const HilbertTable t = build_table(curve, offset(box_or_default(), 1), inv);
            doc = report_semigroup(semigroup(t, inv));
        } else if (*series) {
            const LatticePoint box = box_or_default();
            const HilbertTable t =
                build_table(curve, componentwise_max(offset(box, 1), offset(inv.conductor, 2)), inv);
            if (series_kind == "poincare") {
                doc = report_series("poincare",
                                    poincare_from_hilbert(t).restricted_to(LatticePoint(r, 0), box));
            } else if (series_kind == "motivic") {
                doc = report_series("motivic_normalized", motivic_normalized(motivic_series(t), inv));
            } else {
                const AlexanderPoly a = alexander(t, inv);
                doc = report_series("alexander", a.poly, a.reflection);
            }
        } else if (*homology) {
            std::vector<LatticePoint> points;
            if (!at_text.empty()) {
                points.push_back(parse_point(at_text, r, "--at"));
            } else {
                points = BoxIndex(box_or_default()).points();
            }
            LatticePoint corner = offset(inv.conductor, 2);
            for (const auto& v : points) corner = componentwise_max(corner, offset(v, 1));
            const HilbertTable t = build_table(curve, corner, inv);
            std::vector<std::pair<LatticePoint, GradedGroup>> groups;
            for (const auto& v : points) groups.emplace_back(v, grv_homology_direct(t, v));
            doc = report_homology(groups);
        } else if (*inv_cmd) {
            doc = report_invariants(inv);
        } else if (*verify) {
            const auto results = run_verify(curve, VerifyOptions{deep});
            doc = report_verify(results);
            if (!doc->data()["passed"].get<bool>()) status = 1;
        }
        std::cout << (format == "json" ? doc->to_json() : doc->text());
        return status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
