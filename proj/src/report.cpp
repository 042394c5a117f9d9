#include "curvelat/report.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "curvelat/errors.hpp"

namespace curvelat {

using Json = ReportDocument::Json;

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& what) {
    throw SchemaError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

}  // namespace

Curve parse_curve(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        schema("", std::string("not valid JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) schema("", "expected an object");
    for (const auto& [key, value] : doc.items())
        if (key != "truncation" && key != "branches") schema("/" + key, "unknown key");

    if (!doc.contains("truncation")) schema("/truncation", "missing");
    const auto& tr = doc["truncation"];
    if (!tr.is_number_integer() || tr.get<long long>() < 1 || tr.get<long long>() > 4096)
        schema("/truncation", "expected an integer in [1, 4096]");
    const int truncation = tr.get<int>();

    if (!doc.contains("branches")) schema("/branches", "missing");
    const auto& branches = doc["branches"];
    if (!branches.is_array() || branches.empty()) schema("/branches", "expected a non-empty array");

    std::vector<Branch> parsed;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const std::string base = "/branches/" + std::to_string(i);
        const auto& b = branches[i];
        if (!b.is_object()) schema(base, "expected an object");
        for (const auto& [key, value] : b.items())
            if (key != "x" && key != "y") schema(base + "/" + key, "unknown key");
        TruncSeries comps[2];
        const char* names[2] = {"x", "y"};
        for (int c = 0; c < 2; ++c) {
            const std::string pointer = base + "/" + names[c];
            if (!b.contains(names[c])) schema(pointer, "missing");
            if (!b[names[c]].is_string()) schema(pointer, "expected a polynomial string");
            try {
                comps[c] = parse_poly(b[names[c]].get<std::string>(), truncation);
            } catch (const ParseError& e) {
                schema(pointer, e.what());
            }
        }
        parsed.emplace_back(comps[0], comps[1]);
    }
    return Curve(std::move(parsed));
}

Curve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_curve(buffer.str());
}

ReportDocument::ReportDocument(std::string kind, Json data, std::string text)
    : kind_(std::move(kind)), data_(std::move(data)), text_(std::move(text)) {}

std::string ReportDocument::to_json() const {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = kind_;
    doc["data"] = data_;
    doc["text"] = text_;
    return doc.dump(2) + "\n";
}

ReportDocument ReportDocument::from_json(const std::string& json) {
    Json doc;
    try {
        doc = Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        schema("", std::string("not valid JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) schema("", "expected an object");
    if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
        schema("/schema_version", "unsupported version");
    if (!doc.contains("kind") || !doc["kind"].is_string()) schema("/kind", "expected a string");
    if (!doc.contains("data")) schema("/data", "missing");
    if (!doc.contains("text") || !doc["text"].is_string()) schema("/text", "expected a string");
    return ReportDocument(doc["kind"].get<std::string>(), doc["data"],
                          doc["text"].get<std::string>());
}

namespace {

std::string grid(const LatticePoint& corner, const std::function<std::string(const LatticePoint&)>& cell) {
    std::ostringstream os;
    if (corner.size() == 1) {
        for (int x = 0; x <= corner[0]; ++x) os << (x ? " " : "") << cell({x});
        os << "\n";
    } else if (corner.size() == 2) {
        std::size_t width = 1;
        for (const auto& v : BoxIndex(corner).points()) width = std::max(width, cell(v).size());
        // Origin at the lower left, first coordinate to the right.
        for (int y = corner[1]; y >= 0; --y) {
            for (int x = 0; x <= corner[0]; ++x)
                os << (x ? " " : "") << std::setw(static_cast<int>(width)) << cell({x, y});
            os << "\n";
        }
    } else {
        for (const auto& v : BoxIndex(corner).points()) os << to_string(v) << " " << cell(v) << "\n";
    }
    return os.str();
}

Json point_json(const LatticePoint& v) { return Json(v); }

LatticePoint point_from(const Json& j, const std::string& pointer) {
    if (!j.is_array()) schema(pointer, "expected an array of integers");
    LatticePoint v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) schema(pointer, "expected an array of integers");
        v.push_back(x.get<int>());
    }
    return v;
}

Json group_json(const GradedGroup& g) {
    Json arr = Json::array();
    for (auto it = g.groups().rbegin(); it != g.groups().rend(); ++it) {
        Json torsion = Json::array();
        for (const BigInt& t : it->second.torsion) torsion.push_back(curvelat::to_string(t));
        Json entry;
        entry["degree"] = it->first;
        entry["free_rank"] = it->second.free_rank;
        entry["torsion"] = torsion;
        arr.push_back(entry);
    }
    return arr;
}

GradedGroup group_from(const Json& j) {
    if (!j.is_array()) schema("/data/points/groups", "expected an array");
    GradedGroup g;
    for (const auto& e : j) {
        HomologyGroup h;
        h.free_rank = e.at("free_rank").get<std::size_t>();
        for (const auto& t : e.at("torsion")) h.torsion.emplace_back(t.get<std::string>());
        g.set(e.at("degree").get<int>(), h);
    }
    return g;
}

}  // namespace

ReportDocument report_hilbert(const HilbertTable& t) {
    Json data;
    data["corner"] = point_json(t.corner());
    data["order"] = "last coordinate fastest";
    Json values = Json::array();
    for (const auto& v : t.box().points()) values.push_back(t(v));
    data["values"] = values;
    return ReportDocument("hilbert", data,
                          grid(t.corner(), [&](const LatticePoint& v) { return std::to_string(t(v)); }));
}

HilbertTable table_from_report(const ReportDocument& doc) {
    if (doc.kind() != "hilbert") schema("/kind", "expected a hilbert report");
    const LatticePoint corner = point_from(doc.data().at("corner"), "/data/corner");
    std::vector<int> values;
    for (const auto& x : doc.data().at("values")) values.push_back(x.get<int>());
    if (values.size() != BoxIndex(corner).size()) schema("/data/values", "wrong number of values");
    return HilbertTable(corner, std::move(values));
}

ReportDocument report_value(const LatticePoint& v, int h) {
    Json data;
    data["at"] = point_json(v);
    data["h"] = h;
    return ReportDocument("value", data, std::to_string(h) + "\n");
}

ReportDocument report_semigroup(const Semigroup& s) {
    Json data;
    data["conductor"] = point_json(s.conductor());
    data["box"] = point_json(s.box().corner());
    Json elems = Json::array();
    for (const auto& v : s.elements()) elems.push_back(point_json(v));
    data["elements"] = elems;
    std::string text = grid(s.box().corner(), [&](const LatticePoint& v) {
        return std::string(s.contains(v) ? "*" : ".");
    });
    text += "conductor " + to_string(s.conductor()) + "\n";
    return ReportDocument("semigroup", data, text);
}

ReportDocument report_series(const std::string& name, const BoxSeries& s,
                             const std::string& reflection) {
    Json data;
    data["name"] = name;
    Json vars = Json::array();
    for (int i = 0; i < s.r(); ++i) vars.push_back(variable_name(s.r(), i));
    if (s.has_q()) vars.push_back("q");
    data["variables"] = vars;
    data["lo"] = point_json(s.lo());
    data["hi"] = point_json(s.hi());
    data["polynomial"] = s.to_string();
    if (!reflection.empty()) data["reflection"] = reflection;
    return ReportDocument("series", data, s.to_string() + "\n");
}

BoxSeries series_from_report(const ReportDocument& doc) {
    if (doc.kind() != "series") schema("/kind", "expected a series report");
    const auto& d = doc.data();
    bool has_q = false;
    for (const auto& v : d.at("variables")) has_q = has_q || v == "q";
    return BoxSeries::parse(d.at("polynomial").get<std::string>(), point_from(d.at("lo"), "/data/lo"),
                            point_from(d.at("hi"), "/data/hi"), has_q);
}

ReportDocument report_homology(const std::vector<std::pair<LatticePoint, GradedGroup>>& groups) {
    Json points = Json::array();
    std::string text;
    for (const auto& [v, g] : groups) {
        Json entry;
        entry["v"] = point_json(v);
        entry["groups"] = group_json(g);
        entry["text"] = g.to_string();
        points.push_back(entry);
        text += (groups.size() == 1 ? "" : to_string(v) + " ") + g.to_string() + "\n";
    }
    Json data;
    data["points"] = points;
    return ReportDocument("homology", data, text);
}

std::vector<std::pair<LatticePoint, GradedGroup>> homology_from_report(const ReportDocument& doc) {
    if (doc.kind() != "homology") schema("/kind", "expected a homology report");
    std::vector<std::pair<LatticePoint, GradedGroup>> out;
    for (const auto& e : doc.data().at("points"))
        out.emplace_back(point_from(e.at("v"), "/data/points/v"), group_from(e.at("groups")));
    return out;
}

ReportDocument report_invariants(const CurveInvariants& inv) {
    Json data;
    data["r"] = inv.r;
    data["delta"] = inv.delta;
    data["mu"] = inv.mu;
    data["delta_i"] = inv.delta_i;
    data["mu_i"] = inv.mu_i;
    data["conductor"] = point_json(inv.conductor);
    data["intersections"] = inv.pairwise;
    std::ostringstream os;
    os << "r " << inv.r << "\n"
       << "delta " << inv.delta << "\n"
       << "mu " << inv.mu << "\n"
       << "delta_i " << to_string(inv.delta_i) << "\n"
       << "mu_i " << to_string(inv.mu_i) << "\n"
       << "conductor " << to_string(inv.conductor) << "\n";
    if (inv.r > 1) {
        os << "intersections\n";
        for (const auto& row : inv.pairwise) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "  ") << row[j];
            os << "\n";
        }
    }
    return ReportDocument("invariants", data, os.str());
}

namespace {

class Suite {
public:
    explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

    void check(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r{name, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;
};

std::string fail_if(bool bad, const std::string& why) { return bad ? why : std::string(); }

std::string local_matroid_suite(const Matroid& m) {
    const LaurentPoly arr = arrangement_poincare(m);
    const GradedGroup os = os_homology(m);
    if (os.has_torsion()) return "torsion in OS homology";
    if (!(os.poincare() == arr)) return "OS homology ranks differ from the arrangement polynomial";
    if (!os_gradings_coincide(m)) return "|K| and rank gradings differ on OS homology";
    const GradedGroup du = du_homology(m, m.n() + 2);
    if (du.has_torsion()) return "torsion in d_U homology";
    if (!(du.poincare() == projective_poincare(m).substitute(1, kLambda + 1)))
        return "d_U homology ranks differ from the projective polynomial";
    if (!os_differential_identities(m)) return "differential identities fail";
    if (!d0_structure_checks(m).all()) return "d0 structure checks fail";
    return {};
}

}  // namespace

std::vector<CheckResult> run_verify(const Curve& c, const VerifyOptions& options) {
    std::vector<CheckResult> results;
    Suite suite(results);
    const int pad = options.deep ? 4 : 2;
    const int u_trunc = grv_u_truncation(c.r()) * (options.deep ? 2 : 1);

    CurveInvariants inv;
    try {
        inv = invariants(c);
        results.push_back({"invariants", true, {}});
    } catch (const std::exception& e) {
        results.push_back({"invariants", false, e.what()});
        return results;
    }
    const LatticePoint box = offset(inv.conductor, pad);
    const LatticePoint corner = offset(box, 1);

    std::optional<HilbertTable> table;
    suite.check("table matches oracle", [&] {
        TableBuildOptions opt;
        opt.sample_percent = 100;
        table = build_table(c, corner, inv, opt);
        return std::string();
    });
    if (!table) return results;
    const HilbertTable& t = *table;

    suite.check("symmetry", [&] { return fail_if(!symmetry_check(t, inv), "h(l-v)-h(v) != delta-|v|"); });
    suite.check("large-n steps", [&] {
        const HilbertTable wide = build_table(c, offset(inv.conductor, std::max(pad, 4)), inv);
        return fail_if(!large_n_step_check(wide, inv), "unit steps beyond l are not 1");
    });
    suite.check("semigroup conductor", [&] {
        semigroup(t, inv);
        return std::string();
    });
    suite.check("Poincaré inversion round trip", [&] {
        return fail_if(!(hilbert_from_poincare(subcurve_poincare(t), t.corner()) == t),
                       "reconstructed table differs");
    });
    suite.check("H-P identity", [&] { return fail_if(!hpc_identity_check(t), "coefficients differ"); });
    suite.check("motivic series", [&] {
        const BoxSeries pg = motivic_series(t);
        const BoxSeries pbar = motivic_normalized(pg, inv);
        if (!functional_equation_check(pbar, inv)) return std::string("functional equation fails");
        if (!(specialize_q1(pg) == poincare_from_hilbert(t))) return std::string("q = 1 differs from P");
        return fail_if(!motivic_nonnegativity_check(t), "negative coefficient in (-1)^h H_v(-t)");
    });
    suite.check("Alexander polynomial", [&] {
        const AlexanderPoly a = alexander(t, inv);
        return fail_if(a.reflection != (c.r() == 1 ? "mu-k" : "l-e-v"),
                       "symmetry fails (reflection " + a.reflection + ")");
    });
    if (c.r() >= 2) {
        suite.check("restriction to a sub-curve", [&] {
            return fail_if(!torres_restriction_check(t, inv), "coefficients differ");
        });
    }
    suite.check("local matroids", [&] {
        std::map<std::vector<int>, std::string> seen;
        for (const auto& v : BoxIndex(box).points()) {
            const LocalMatroid lm = local_matroid(t, v);
            auto [it, fresh] = seen.try_emplace(lm.matroid.ranks());
            if (fresh) it->second = local_matroid_suite(lm.matroid);
            if (!it->second.empty()) return "at " + to_string(v) + ": " + it->second;
        }
        return std::string();
    });
    suite.check("gr_v homology equals formula", [&] {
        for (const auto& v : BoxIndex(box).points()) {
            const GradedGroup g = grv_homology_direct(t, v, u_trunc);
            if (g.has_torsion()) return "torsion at " + to_string(v);
            if (!(g.poincare() == grv_homology_formula(t, v))) return "mismatch at " + to_string(v);
            if (!g.is_zero() && g.groups().rbegin()->first != -2 * t(v))
                return "top class not in degree -2h at " + to_string(v);
        }
        return std::string();
    });
    suite.check("semigroup detection", [&] {
        const Semigroup s = semigroup(t, inv);
        for (const auto& v : BoxIndex(box).points())
            if (s.contains(v) == grv_homology_direct(t, v, u_trunc).is_zero())
                return "HL^- vanishing disagrees with S at " + to_string(v);
        return std::string();
    });
    suite.check("Euler characteristics", [&] {
        return fail_if(!(euler_series(t) == poincare_from_hilbert(t)), "differs from P");
    });
    suite.check("S_k contractible", [&] {
        std::vector<LatticePoint> us{LatticePoint(c.r(), 0)};
        std::mt19937 rng(20240611u);
        for (int n = 0; n < 3; ++n) {
            LatticePoint u(c.r());
            for (int i = 0; i < c.r(); ++i)
                u[i] = std::uniform_int_distribution<int>(0, inv.conductor[i] + 1)(rng);
            us.push_back(u);
        }
        int top_k = 0;
        for (const auto& u : us) top_k = std::max(top_k, t(u) + 3);
        const HilbertTable wide = build_table(c, sk_corner(inv, top_k), inv);
        GradedGroup point;
        point.set(0, HomologyGroup{1, {}});
        for (const auto& u : us)
            for (int k = wide(u); k <= wide(u) + 3; ++k)
                if (!(sk_homology(wide, u, k) == point))
                    return "S_" + std::to_string(k) + to_string(u) + " not contractible";
        return std::string();
    });
    suite.check("lattice complex d^2 = 0", [&] {
        return fail_if(!full_complex_squares_to_zero(t), "d_U^2 != 0");
    });
    if (c.r() == 1) {
        suite.check("one-branch structure", [&] {
            const HilbertTable wide = build_table(c, {std::max(inv.mu + 3, corner[0])}, inv);
            const R1Structure s = r1_structure(wide, inv);
            if (!s.hl_matches_direct) return std::string("HL^- differs from the closed form");
            if (!s.e2_routes_agree) return std::string("E2 routes disagree");
            if (!s.support_in_0_mu) return std::string("E2 support leaves [0, mu]");
            if (!s.symmetric) return std::string("E2 not symmetric");
            if (!s.exact_sequence) return std::string("exact sequence bookkeeping fails");
            if (!s.recovers_semigroup) return std::string("S not recovered");
            const BoxSeries delta = alexander(wide, inv).poly;
            return fail_if(!(s.e2_euler.restricted_to({0}, {inv.mu}) == delta) ||
                               s.e2_euler.terms().size() != delta.terms().size(),
                           "E2 Euler sum differs from the Alexander polynomial");
        });
    }
    if (c.r() == 2) {
        suite.check("two-branch classification", [&] {
            for (const auto& v : BoxIndex(box).points())
                if (!(r2_classify(t, v).homology == grv_homology_direct(t, v, u_trunc)))
                    return "prediction differs at " + to_string(v);
            return std::string();
        });
    }
    return results;
}

ReportDocument report_verify(const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    bool all = true;
    std::string text;
    for (const auto& r : results) {
        Json e;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        checks.push_back(e);
        all = all && r.passed;
        text += (r.passed ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
    }
    Json data;
    data["passed"] = all;
    data["checks"] = checks;
    return ReportDocument("verify", data, text);
}

}  // namespace curvelat
