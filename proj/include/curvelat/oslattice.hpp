#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "curvelat/laurent.hpp"
#include "curvelat/matrix.hpp"
#include "curvelat/matroid.hpp"

namespace curvelat {

/// The lattice-homology grading parameter: deg U = -2.
inline constexpr int kLambda = -2;

struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// A graded abelian group; zero summands are not stored.
class GradedGroup {
public:
    void set(int degree, HomologyGroup g);
    const std::map<int, HomologyGroup>& groups() const noexcept { return groups_; }
    HomologyGroup at(int degree) const;

    bool is_zero() const noexcept { return groups_.empty(); }
    bool has_torsion() const;

    /// sum_d rank_d t^d.
    LaurentPoly poincare() const;

    /// "0", or summands in decreasing degree such as "Z[-4] + Z[-5]",
    /// "Z^2[0]" or "Z/2[-3]".
    std::string to_string() const;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    std::map<int, HomologyGroup> groups_;
};

/// Integer homology of a bounded chain complex given by its boundary maps.
/// dims[d] is the rank of C_d and boundaries[d] : C_d -> C_{d-1}
/// (boundaries[0] is ignored and may be empty).
GradedGroup chain_homology(const std::vector<std::size_t>& dims,
                           const std::vector<SparseIntMatrix>& boundaries);

/// A free complex over Z[U] on finitely many cells. The generator U^j c
/// sits in degree dim(c) - 2 (j + weight(c)) + shift.
class UComplex {
public:
    struct Face {
        std::size_t cell;
        int sign;
        int u_power;
    };
    struct Cell {
        int dim = 0;
        int weight = 0;
        std::vector<Face> boundary;
    };

    explicit UComplex(std::vector<Cell> cells, int shift = 0);

    const std::vector<Cell>& cells() const noexcept { return cells_; }

    /// Highest degree carrying a generator.
    int top_degree() const;

    /// Homology of the complex truncated at U^u_truncation, reported on the
    /// degrees [top + 1 - 2 u_truncation, top], where truncation cannot
    /// interfere. The computation is repeated at u_truncation + 2; the two
    /// must agree on the common range and the extra degrees must be zero,
    /// otherwise ConsistencyError.
    GradedGroup homology(int u_truncation) const;

    /// d^2 = 0 as an identity of matrices over Z[U].
    bool squares_to_zero() const;

private:
    GradedGroup homology_once(int u_truncation, int low, int high) const;

    std::vector<Cell> cells_;
    int shift_;
};

/// Orlik–Solomon data of a matroid on n elements: basis z_K for all subsets
/// K, ordered by (|K|, mask). The boundary d z_K = sum_i (-1)^(i-1)
/// z_{K - a_i} splits as d0 (rank-preserving faces) + d1 (rank-dropping).
class OSComplex {
public:
    explicit OSComplex(Matroid m);

    const Matroid& matroid() const noexcept { return m_; }
    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<SubsetMask>& basis() const noexcept { return basis_; }
    std::size_t position(SubsetMask k) const { return position_.at(k.bits()); }
    bool dependent(SubsetMask k) const { return m_.rank(k) < k.size(); }

    /// Full matrices on the basis; column = source, row = target.
    IntMatrix d() const;
    IntMatrix d0() const;
    IntMatrix d1() const;

    /// The Z[U] complex with cells z_K, weight rho(K), face powers
    /// rho(K) - rho(K - a).
    UComplex u_complex(int shift = 0) const;

private:
    IntMatrix build(int which) const;

    Matroid m_;
    std::vector<SubsetMask> basis_;
    std::vector<std::size_t> position_;
};

/// sum_K (-1)^|K| (-t)^rho(K).
LaurentPoly arrangement_poincare(const Matroid& m);

/// arrangement_poincare / (1 + t); ConsistencyError if not exact.
LaurentPoly projective_poincare(const Matroid& m);

/// Homology of (E, d0), graded by |K|.
GradedGroup os_homology(const Matroid& m);

/// Homology of (E, d0) split by rho; true when every nonzero piece sits at
/// |K| == rho(K), so the two gradings agree.
bool os_gradings_coincide(const Matroid& m);

/// Homology of (E[U], d_U) graded by |K| + lambda (m + rho(K)).
/// Requires u_truncation >= n + 2.
GradedGroup du_homology(const Matroid& m, int u_truncation);

/// d0^2 = d1^2 = 0 and d0 d1 + d1 d0 = 0.
bool os_differential_identities(const Matroid& m);

struct D0StructureReport {
    bool ideal_equals_j_plus_dj = false;  // I = J + dJ
    bool d0_kills_jperp = false;          // d0 J^perp = 0
    bool d1_preserves_j = false;          // d1 J in J
    bool kernel_split = false;            // Ker d0 = J^perp + Im d0
    bool image_split = false;             // Im d0 = (Im d0 cap J) + (Im d0 cap J^perp)

    bool all() const {
        return ideal_equals_j_plus_dj && d0_kills_jperp && d1_preserves_j && kernel_split &&
               image_split;
    }
};

/// Exact linear algebra over Q on the exterior algebra. J is spanned by
/// z_K with K dependent, J^perp by z_K with K independent, and I is the
/// ideal generated by J and d J. Requires n <= 8.
D0StructureReport d0_structure_checks(const Matroid& m);

}  // namespace curvelat
