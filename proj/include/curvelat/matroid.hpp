#pragma once

#include <string>
#include <vector>

#include "curvelat/curve.hpp"
#include "curvelat/laurent.hpp"

namespace curvelat {

/// A matroid on the ground set {0, ..., n-1}, given by its full rank table.
class Matroid {
public:
    /// ranks[K.bits()] = rho(K). Throws ConsistencyError when the rank
    /// axioms fail (0 <= rho(K) <= |K|, monotone, submodular).
    Matroid(int n, std::vector<int> ranks);

    static Matroid boolean(int n);
    /// Uniform matroid U_{k,n}: rho(K) = min(|K|, k). k = 2 models n generic
    /// lines through the origin of a plane.
    static Matroid uniform(int n, int k);

    int n() const noexcept { return n_; }
    int rank(SubsetMask k) const { return ranks_.at(k.bits()); }
    int total_rank() const { return rank(SubsetMask::full(n_)); }
    bool independent(SubsetMask k) const { return rank(k) == k.size(); }
    const std::vector<int>& ranks() const noexcept { return ranks_; }

    /// Empty string when all three rank axioms hold, otherwise a description
    /// of the first violation.
    static std::string axiom_violation(int n, const std::vector<int>& ranks);

    friend bool operator==(const Matroid&, const Matroid&) = default;

private:
    int n_;
    std::vector<int> ranks_;
};

/// chi_M(t) = sum_K (-1)^|K| t^(rho(E) - rho(K)).
LaurentPoly characteristic_polynomial(const Matroid& m);

/// Subsets ordered by (|K|, mask value).
std::vector<SubsetMask> subsets_by_size(int n);

}  // namespace curvelat
