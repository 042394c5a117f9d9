#pragma once

#include <map>
#include <vector>

#include "curvelat/hilbert.hpp"
#include "curvelat/oslattice.hpp"
#include "curvelat/series.hpp"

namespace curvelat {

/// Cells of the lattice complex: cubes box(v, K) = {x : v <= x <= v + e_K}
/// of weight h(v + e_K). Faces drop one direction i in K; the far face is
/// based at v + e_i. With p the position of i in K (from 1), the far face
/// carries sign (-1)^(p-1) and the near face the opposite sign.
struct Cube {
    LatticePoint base;
    SubsetMask directions;

    friend auto operator<=>(const Cube&, const Cube&) = default;
};

/// The complex gr_v: the 2^r cubes based at v with only their near faces,
/// weights h(v + e_K). Needs the table to cover v + e.
UComplex grv_complex(const HilbertTable& t, const LatticePoint& v);

/// Default U-truncation for gr_v homology: r + 3.
int grv_u_truncation(int r);

/// HL^-(v) by Smith normal form on gr_v; u_truncation 0 means the default.
GradedGroup grv_homology_direct(const HilbertTable& t, const LatticePoint& v,
                                int u_truncation = 0);

/// (-t)^(-h(v)) H_v(-1/t).
LaurentPoly grv_homology_formula(const HilbertTable& t, const LatticePoint& v);

/// sum_v P_v(-1) t^v over [0, corner - e] using the formula polynomials.
BoxSeries euler_series(const HilbertTable& t);

/// Cubical homology of S_k(u), the union of cubes based at w >= u inside
/// the table box with h(w + e_K) <= k. Throws BoxTooSmall when some box
/// point on the outer boundary has h <= k (the complex would be cut off).
GradedGroup sk_homology(const HilbertTable& t, const LatticePoint& u, int k);

/// Corner large enough for sk_homology with weights up to k:
/// k + delta_i + 1 along every axis.
LatticePoint sk_corner(const CurveInvariants& inv, int k);

/// The lattice complex on every cube inside the table box, with both near
/// and far faces; true when d_U^2 = 0 as a matrix identity over Z[U].
bool full_complex_squares_to_zero(const HilbertTable& t);

struct E2Term {
    int v = 0;
    int epsilon = 0;  // 0 for a_v, 1 for alpha_v
    int degree = 0;   // homological degree of the cube generating it

    friend bool operator==(const E2Term&, const E2Term&) = default;
};

struct R1Structure {
    std::vector<int> hl_support;      // v with HL^-(v) != 0
    std::map<int, int> hl_degree;     // degree of the generator a_v
    std::map<int, int> u_action;      // v -> v + 1 when U a_v = a_{v+1}
    std::vector<E2Term> e2_closed;    // from S
    std::vector<E2Term> e2_direct;    // from the U = 0 spectral sequence
    int range = 0;                    // everything above is computed on [0, range]

    bool hl_matches_direct = false;   // closed-form HL^- equals the SNF computation
    bool e2_routes_agree = false;
    bool support_in_0_mu = false;
    bool symmetric = false;           // E^2 Euler exponents v + eps symmetric under x -> mu - x
    bool exact_sequence = false;      // kernel / cokernel bookkeeping of U
    bool recovers_semigroup = false;  // from both HL^- and E^2
    BoxSeries e2_euler;               // sum (-1)^eps t^(v + eps)
};

/// One-branch structure on [0, corner - 2]; needs corner >= mu + 3.
R1Structure r1_structure(const HilbertTable& t, const CurveInvariants& inv);

enum class R2Case { A, B, C, D, E };

char to_char(R2Case c);

struct R2Prediction {
    R2Case kind;
    GradedGroup homology;
};

/// Classifies the unit square at v by (h(v+e_1), h(v+e_2), h(v+e)) - h(v)
/// and returns the predicted HL^-(v). Throws UnclassifiablePattern.
R2Prediction r2_classify(const HilbertTable& t, const LatticePoint& v);

}  // namespace curvelat
