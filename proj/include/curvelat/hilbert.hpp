#pragma once

#include <cstddef>
#include <vector>

#include "curvelat/box.hpp"
#include "curvelat/curve.hpp"
#include "curvelat/laurent.hpp"
#include "curvelat/matroid.hpp"

namespace curvelat {

/// Numerical invariants of the curve germ.
struct CurveInvariants {
    int r = 0;
    int delta = 0;                          // delta(C)
    int mu = 0;                             // mu(C) = 2 delta - r + 1
    std::vector<int> delta_i;               // per branch
    std::vector<int> mu_i;                  // 2 delta_i
    std::vector<std::vector<int>> pairwise; // (C_i, C_j), zero on the diagonal
    LatticePoint conductor;                 // l_i = mu_i + sum_{j != i} (C_j, C_i)
};

/// Computes delta_i and (C_i, C_j) by diagonal stabilization of |v| - h(v),
/// derives the rest, and verifies h(l + e_K) = |l + e_K| - delta with the
/// oracle for every K. Throws NonStabilizing or ConsistencyError.
CurveInvariants invariants(const Curve& c);

enum class FillOrder { RowMajor, ColumnMajor };

struct TableBuildOptions {
    FillOrder order = FillOrder::RowMajor;
    /// Percentage of box points re-checked against h_oracle, chosen by a
    /// deterministic hash of the coordinates. 100 checks every point.
    int sample_percent = 10;
};

struct TableBuildStats {
    std::size_t oracle_seeds = 0;     // axis points and points the recursion cannot decide
    std::size_t recursion_steps = 0;  // points filled from the jump criterion
    std::size_t oracle_checks = 0;    // sampled cross-checks
};

/// Memoized Hilbert function on the box [0, corner].
class HilbertTable {
public:
    HilbertTable(LatticePoint corner, std::vector<int> values, TableBuildStats stats = {});

    int r() const noexcept { return index_.dim(); }
    const LatticePoint& corner() const noexcept { return index_.corner(); }
    const BoxIndex& box() const noexcept { return index_; }
    const TableBuildStats& stats() const noexcept { return stats_; }

    /// True when max(v, 0) lies in the box.
    bool covers(const LatticePoint& v) const;

    /// h(max(v, 0)); throws OutOfBox when not covered.
    int operator()(const LatticePoint& v) const;

    /// The table of the sub-curve C_K read off the slice v_i = 0 for i not
    /// in K. Coordinates keep their relative order.
    HilbertTable restricted(SubsetMask k) const;

    friend bool operator==(const HilbertTable& a, const HilbertTable& b) {
        return a.corner() == b.corner() && a.values_ == b.values_;
    }

private:
    BoxIndex index_;
    std::vector<int> values_;
    TableBuildStats stats_;
};

/// Fills [0, corner].
///
/// Values on [0, l] come from the jump criterion: h(v + e_i) = h(v) + 1 iff
/// some u in S has u_i = v_i and u_j >= v_j. Points are visited in
/// decreasing order so every such u other than v is already classified;
/// the search can stop at l because min(u, l) stays in S. The axes and
/// the points the criterion leaves undecided are seeded by h_oracle.
/// Beyond l every unit step is a jump. A deterministic sample is then
/// re-checked against h_oracle; any disagreement throws ConsistencyError.
HilbertTable build_table(const Curve& c, const LatticePoint& corner, const CurveInvariants& inv,
                         const TableBuildOptions& options = {});
HilbertTable build_table(const Curve& c, const LatticePoint& corner);

/// Every value straight from h_oracle.
HilbertTable oracle_table(const Curve& c, const LatticePoint& corner);

/// Value semigroup restricted to the box [0, table corner - e].
class Semigroup {
public:
    Semigroup(BoxIndex box, std::vector<char> member, LatticePoint conductor);

    const BoxIndex& box() const noexcept { return box_; }
    const LatticePoint& conductor() const noexcept { return conductor_; }
    bool contains(const LatticePoint& v) const;  // throws OutOfBox outside the box
    std::vector<LatticePoint> elements() const;

private:
    BoxIndex box_;
    std::vector<char> member_;
    LatticePoint conductor_;
};

/// v in S iff h(v + e_i) > h(v) for all i. Verifies that every box point
/// dominating the conductor is a member (ConsistencyError otherwise).
Semigroup semigroup(const HilbertTable& t, const CurveInvariants& inv);

/// h(l - v) - h(v) == delta - |v| for all 0 <= v <= l. Requires the table to
/// cover l.
bool symmetry_check(const HilbertTable& t, const CurveInvariants& inv);

/// h(v + (n+1)e_i) - h(v + n e_i) == 1 for n in [l_i, l_i + 3], on the
/// box points v with v_i = 0. The table must reach l_i + 4 along axis i.
bool large_n_step_check(const HilbertTable& t, const CurveInvariants& inv);

struct LocalMatroid {
    LatticePoint base;
    Matroid matroid;  // rho_v(K) = h(v + e_K) - h(v)
};

/// Throws ConsistencyError if rho_v violates the rank axioms.
LocalMatroid local_matroid(const HilbertTable& t, const LatticePoint& v);

LaurentPoly char_poly(const LocalMatroid& m);

}  // namespace curvelat
