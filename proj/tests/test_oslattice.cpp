#include <doctest.h>

#include <random>

#include "curvelat/errors.hpp"
#include "curvelat/oslattice.hpp"
#include "oracles.hpp"

using namespace curvelat;

namespace {

LaurentPoly from_coeffs(const std::vector<long long>& c, int lowest = 0) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(lowest + static_cast<int>(i), BigInt(static_cast<long>(c[i])));
    return p;
}

LaurentPoly binomial_row(int n) {
    std::vector<long long> c;
    for (int k = 0; k <= n; ++k) c.push_back(oracle::binomial(n, k));
    return from_coeffs(c);
}

// sum_K (-1)^|K| (-t)^rho(K), straight from a rank table.
LaurentPoly arrangement_oracle(int n, const std::vector<int>& ranks) {
    std::vector<long long> c(n + 1, 0);
    for (std::uint32_t k = 0; k < ranks.size(); ++k) {
        const int size = __builtin_popcount(k);
        c[ranks[k]] += ((size + ranks[k]) % 2 == 0) ? 1 : -1;
    }
    return from_coeffs(c);
}

void full_suite(const Matroid& m, const LaurentPoly& arrangement, const LaurentPoly& projective) {
    CHECK(arrangement_poincare(m) == arrangement);
    CHECK(projective_poincare(m) == projective);
    const GradedGroup os = os_homology(m);
    CHECK_FALSE(os.has_torsion());
    CHECK(os.poincare() == arrangement);
    CHECK(os_gradings_coincide(m));
    const GradedGroup du = du_homology(m, m.n() + 2);
    CHECK_FALSE(du.has_torsion());
    CHECK(du.poincare() == projective.substitute(1, -1));
    CHECK(os_differential_identities(m));
    const D0StructureReport d0 = d0_structure_checks(m);
    CHECK(d0.ideal_equals_j_plus_dj);
    CHECK(d0.d0_kills_jperp);
    CHECK(d0.d1_preserves_j);
    CHECK(d0.kernel_split);
    CHECK(d0.image_split);
}

}  // namespace

TEST_CASE("graded groups") {
    GradedGroup g;
    g.set(-4, {1, {}});
    g.set(-5, {1, {}});
    CHECK(g.to_string() == "Z[-4] + Z[-5]");
    g.set(0, {2, {}});
    g.set(-3, {0, {BigInt(2)}});
    CHECK(g.to_string() == "Z^2[0] + Z/2[-3] + Z[-4] + Z[-5]");
    CHECK(g.has_torsion());
    CHECK(GradedGroup().to_string() == "0");
}

TEST_CASE("chain homology of a circle and of RP^2") {
    // Circle: two vertices, two edges.
    SparseIntMatrix d1(2, 2);
    d1.add(0, 0, -1);
    d1.add(1, 0, 1);
    d1.add(0, 1, 1);
    d1.add(1, 1, -1);
    const GradedGroup circle = chain_homology({2, 2}, {SparseIntMatrix(0, 0), d1});
    CHECK(circle.at(0).free_rank == 1);
    CHECK(circle.at(1).free_rank == 1);

    // Minimal cell structure of RP^2: 1 -> 1 -> 1 with maps 2 and 0.
    SparseIntMatrix a(1, 1), b(1, 1);
    b.add(0, 0, 2);
    const GradedGroup rp2 = chain_homology({1, 1, 1}, {SparseIntMatrix(0, 0), a, b});
    CHECK(rp2.at(0).free_rank == 1);
    CHECK(rp2.at(1).torsion == std::vector<BigInt>{2});
    CHECK(rp2.at(2).is_zero());
}

TEST_CASE("boolean matroids") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        full_suite(Matroid::boolean(n), binomial_row(n), binomial_row(n - 1));
    }
}

TEST_CASE("generic lines in the plane") {
    full_suite(Matroid::uniform(1, 1), from_coeffs({1, 1}), from_coeffs({1}));
    for (int r = 2; r <= 5; ++r) {
        CAPTURE(r);
        const Matroid m = Matroid::uniform(r, 2);
        full_suite(m, from_coeffs({1, r, r - 1}), from_coeffs({1, r - 1}));
        GradedGroup expected;
        expected.set(0, {1, {}});
        expected.set(-1, {static_cast<std::size_t>(r - 1), {}});
        CHECK(du_homology(m, m.n() + 2) == expected);
    }
}

TEST_CASE("d_U needs a long enough truncation") {
    CHECK_THROWS(du_homology(Matroid::uniform(3, 2), 2));
}

TEST_CASE("property: vector matroids") {
    std::mt19937 gen(5150);
    std::uniform_int_distribution<int> n_dist(1, 5), dim_dist(1, 3), entry(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = n_dist(gen), dim = dim_dist(gen);
        std::vector<std::vector<int>> vecs;
        while (static_cast<int>(vecs.size()) < n) {
            std::vector<int> v(dim);
            for (int& x : v) x = entry(gen);
            if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) vecs.push_back(v);
        }
        const std::vector<int> ranks = oracle::vector_matroid(vecs);
        const Matroid m(n, ranks);
        const LaurentPoly arr = arrangement_oracle(n, ranks);
        LaurentPoly proj;
        REQUIRE(arr.divide_exact(from_coeffs({1, 1}), proj));
        full_suite(m, arr, proj);
        CHECK(characteristic_polynomial(m).evaluate(1) == 0);
    }
}
