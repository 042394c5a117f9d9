#include <doctest.h>

#include <random>

#include "curvelat/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace curvelat;
using support::curve;

TEST_CASE("branch validation") {
    CHECK_THROWS_AS(support::branch("0", "0"), InvalidBranch);
    CHECK_THROWS_AS(support::branch("1 + t", "t^2"), InvalidBranch);
    CHECK_THROWS_AS(support::branch("t^2", "t^4"), InvalidBranch);
    CHECK_THROWS_AS(support::branch("t^2", "t^4 + t^6"), InvalidBranch);
    CHECK_THROWS_AS(support::branch("t^40", "0"), InvalidBranch);  // vanishes below T = 32
    CHECK_NOTHROW(support::branch("t^2", "t^4 + t^5"));
    CHECK(support::branch("t^3", "t^2").multiplicity() == 2);
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(Curve({}), InvalidCurve);
    CHECK_THROWS_AS(curve({{"t", "t^2"}, {"t", "t^2"}}), InvalidCurve);
    const Curve c = curve({{"t", "0"}, {"0", "t"}, {"t", "t"}});
    CHECK(c.subcurve(SubsetMask(0b101)).r() == 2);
    CHECK(c.subcurve(SubsetMask(0b101)).branch(1) == c.branch(2));
}

TEST_CASE("h_oracle on the printed examples") {
    const Curve a3 = support::a_odd(2);
    CHECK(h_oracle(a3, {2, 2}) == 2);
    const Curve d5 = support::d5();
    CHECK(h_oracle(d5, {1, 3}) == 2);
    CHECK(h_oracle(d5, {-1, 3}) == h_oracle(d5, {0, 3}));
    CHECK(intersection_multiplicity(d5, 0, 1) == 2);
    CHECK_THROWS_AS(h_oracle(curve({{"t", "t^2"}}, 4), {9}), InsufficientTruncation);
}

TEST_CASE("invariants") {
    const CurveInvariants d5 = invariants(support::d5());
    CHECK(d5.delta == 3);
    CHECK(d5.conductor == LatticePoint{2, 4});
    CHECK(d5.mu_i == std::vector<int>{0, 2});
    CHECK(d5.pairwise[0][1] == 2);
    CHECK(d5.mu == 5);

    const CurveInvariants cusp = invariants(support::corpus("cusp"));
    CHECK(cusp.delta == 1);
    CHECK(cusp.mu == 2);
    CHECK(cusp.conductor == LatticePoint{2});

    const CurveInvariants triple = invariants(support::corpus("triple_point"));
    CHECK(triple.delta == 3);
    CHECK(triple.conductor == LatticePoint{2, 2, 2});

    // Contact of order 10 cannot be resolved when only t^12 is known.
    CHECK_THROWS_AS(invariants(curve({{"t", "t^10"}, {"t", "t^11"}}, 12)), NonStabilizing);
}

TEST_CASE("D5 table equals the printed values") {
    const HilbertTable t = build_table(support::d5(), {5, 5});
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) CHECK(t({a, b}) == support::d5_figure(a, b));
    CHECK(t({-1, 3}) == 2);
}

TEST_CASE("A_{2n-1} follows the piecewise formula") {
    for (int n = 1; n <= 4; ++n) {
        const HilbertTable t = build_table(support::a_odd(n), {n + 3, n + 3});
        for (const auto& v : t.box().points()) CHECK(t(v) == oracle::h_a2n1(n, v[0], v[1]));
    }
}

TEST_CASE("monomial branches count semigroup gaps") {
    const std::vector<std::pair<int, int>> gens = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {3, 7}};
    for (auto [a, b] : gens) {
        const Curve c = curve({{"t^" + std::to_string(a), "t^" + std::to_string(b)}});
        const auto s = oracle::numerical_semigroup({a, b}, 40);
        const HilbertTable t = build_table(c, {(a - 1) * (b - 1) + 3});
        for (int v = 0; v <= t.corner()[0]; ++v) CHECK(t({v}) == oracle::h_from_semigroup(s, v));
        const CurveInvariants inv = invariants(c);
        CHECK(inv.delta == (a - 1) * (b - 1) / 2);  // number of gaps
    }
}

TEST_CASE("fill order, oracle and the recursion agree") {
    for (const auto& name : support::corpus_names()) {
        CAPTURE(name);
        const Curve c = support::corpus(name);
        const CurveInvariants inv = invariants(c);
        const LatticePoint corner = offset(inv.conductor, 2);
        TableBuildOptions row{FillOrder::RowMajor, 100};
        TableBuildOptions col{FillOrder::ColumnMajor, 0};
        const HilbertTable a = build_table(c, corner, inv, row);
        const HilbertTable b = build_table(c, corner, inv, col);
        CHECK(a == b);
        CHECK(a == oracle_table(c, corner));
        CHECK(a.stats().oracle_checks == a.box().size());
    }
}

TEST_CASE("semigroup, symmetry and large steps") {
    const Curve a3 = support::a_odd(2);
    const CurveInvariants inv = invariants(a3);
    const HilbertTable t = build_table(a3, {5, 5});
    const Semigroup s = semigroup(t, inv);
    CHECK(s.contains({1, 1}));
    CHECK_FALSE(s.contains({1, 0}));
    CHECK_THROWS_AS(s.contains({9, 0}), OutOfBox);
    CHECK(symmetry_check(t, inv));
    CHECK(large_n_step_check(build_table(a3, {6, 6}), inv));

    const HilbertTable d5 = build_table(support::d5(), {6, 6});
    const Semigroup sd = semigroup(d5, invariants(support::d5()));
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            const bool bold = (a == 0 && b == 0) || (a == 1 && (b == 2 || b == 3)) ||
                              (a >= 2 && b == 2) || (a >= 2 && b >= 4);
            CHECK(sd.contains({a, b}) == bold);
        }
}

TEST_CASE("local matroids") {
    const HilbertTable t = build_table(support::a_odd(2), {5, 5});
    const LocalMatroid m11 = local_matroid(t, {1, 1});
    CHECK(m11.matroid.rank(SubsetMask(1)) == 1);
    CHECK(m11.matroid.rank(SubsetMask(2)) == 1);
    CHECK(m11.matroid.rank(SubsetMask(3)) == 1);
    CHECK(char_poly(m11).to_string() == "-1 + t");
    const LocalMatroid m22 = local_matroid(t, {2, 2});
    CHECK(m22.matroid.rank(SubsetMask(3)) == 2);
    CHECK(char_poly(m22).to_string() == "1 - 2*t + t^2");

    CHECK_THROWS_AS(Matroid(2, {0, 1, 1, 3}), ConsistencyError);
    CHECK(Matroid::axiom_violation(2, {0, 1, 1, 0}) != "");
}

namespace {

// Random two- and three-branch curves with smooth components y = c x^k + ...,
// plus a singular branch now and then.
Curve random_curve(std::mt19937& gen) {
    std::uniform_int_distribution<int> branches(1, 3), expo(1, 4), coeff(-3, 3);
    const int r = branches(gen);
    std::vector<std::pair<std::string, std::string>> spec;
    std::set<std::string> seen;
    while (static_cast<int>(spec.size()) < r) {
        std::string x = "t", y;
        if (gen() % 4 == 0) {
            const int a = 2 + gen() % 2;
            x = "t^" + std::to_string(a);
            y = "t^" + std::to_string(a + 1);
        } else {
            int c = coeff(gen);
            y = std::to_string(c == 0 ? 1 : c) + "*t^" + std::to_string(expo(gen));
            if (gen() % 2) y += " + t^5";
        }
        if (seen.insert(x + "|" + y).second) spec.push_back({x, y});
    }
    return curve(spec);
}

}  // namespace

TEST_CASE("property: Hilbert function axioms on random curves") {
    std::mt19937 gen(424242);
    for (int trial = 0; trial < 25; ++trial) {
        Curve c = random_curve(gen);
        CurveInvariants inv;
        try {
            inv = invariants(c);
        } catch (const NonStabilizing&) {
            continue;  // coincident tangency beyond the truncation
        }
        const HilbertTable t = build_table(c, offset(inv.conductor, 2), inv,
                                           TableBuildOptions{FillOrder::RowMajor, 100});
        const int r = c.r();
        CHECK(symmetry_check(t, inv));
        for (const auto& v : t.box().points()) {
            for (int i = 0; i < r; ++i) {
                const LatticePoint w = shift(v, SubsetMask::single(i));
                if (!t.covers(w) || !t.box().contains(w)) continue;
                CHECK(t(w) - t(v) >= 0);
                CHECK(t(w) - t(v) <= 1);
            }
            if (!t.box().contains(offset(v, 1))) continue;
            CHECK_NOTHROW(local_matroid(t, v));
            for (std::uint32_t k1 = 0; k1 < (1u << r); ++k1)
                for (std::uint32_t k2 = 0; k2 < (1u << r); ++k2) {
                    const SubsetMask a(k1), b(k2);
                    CHECK(t(shift(v, a)) + t(shift(v, b)) >= t(shift(v, a | b)) + t(shift(v, a & b)));
                }
        }
        for (std::uint32_t k = 1; k < (1u << r); ++k) {
            const SubsetMask K(k);
            const Curve sub = c.subcurve(K);
            const HilbertTable slice = t.restricted(K);
            CHECK(slice == oracle_table(sub, slice.corner()));
        }
    }
}
