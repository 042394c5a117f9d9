#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvelat/trunc_series.hpp"

namespace curvelat {

/// A point of Z^r; coordinates may be negative.
using LatticePoint = std::vector<int>;

std::string to_string(const LatticePoint& v);

/// A subset K of the branch index set {0, ..., r-1}.
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

    static constexpr SubsetMask full(int r) { return SubsetMask((std::uint32_t{1} << r) - 1); }
    static constexpr SubsetMask single(int i) { return SubsetMask(std::uint32_t{1} << i); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }

    constexpr SubsetMask with(int i) const { return SubsetMask(bits_ | (std::uint32_t{1} << i)); }
    constexpr SubsetMask without(int i) const { return SubsetMask(bits_ & ~(std::uint32_t{1} << i)); }
    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }

    /// Members in increasing order.
    std::vector<int> elements() const;

    friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
    friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

private:
    std::uint32_t bits_ = 0;
};

/// v + e_K
LatticePoint shift(const LatticePoint& v, SubsetMask k);
/// Componentwise max(v, 0).
LatticePoint clamp_nonneg(const LatticePoint& v);
int norm(const LatticePoint& v);  // |v| = sum of coordinates
bool dominates(const LatticePoint& a, const LatticePoint& b);  // a >= b componentwise

/// Polynomial in x, y with rational coefficients, keyed by (deg_x, deg_y).
class BivariatePoly {
public:
    BivariatePoly() = default;
    explicit BivariatePoly(std::map<std::pair<int, int>, Rational> terms);

    static BivariatePoly monomial(int a, int b, const Rational& c = 1);

    const std::map<std::pair<int, int>, Rational>& terms() const noexcept { return terms_; }

    BivariatePoly operator+(const BivariatePoly& other) const;
    BivariatePoly operator-(const BivariatePoly& other) const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

/// One branch gamma(t) = (x(t), y(t)).
///
/// Both components vanish at t = 0, not both are zero modulo t^T, and the
/// parametrization is primitive (the gcd of all exponents present is 1).
/// Violations throw InvalidBranch.
class Branch {
public:
    Branch(TruncSeries x, TruncSeries y);

    const TruncSeries& x() const noexcept { return x_; }
    const TruncSeries& y() const noexcept { return y_; }
    int truncation() const noexcept { return std::min(x_.truncation(), y_.truncation()); }

    /// min(ord x, ord y): the smallest nonzero element of the branch's value
    /// semigroup.
    int multiplicity() const noexcept { return multiplicity_; }

    friend bool operator==(const Branch&, const Branch&) = default;

private:
    TruncSeries x_;
    TruncSeries y_;
    int multiplicity_;
};

/// A reduced plane curve germ given by r >= 1 pairwise distinct branches.
class Curve {
public:
    explicit Curve(std::vector<Branch> branches);

    int r() const noexcept { return static_cast<int>(branches_.size()); }
    const std::vector<Branch>& branches() const noexcept { return branches_; }
    const Branch& branch(int i) const { return branches_.at(i); }
    int truncation() const;

    /// The sub-curve C_K; branch order is preserved.
    Curve subcurve(SubsetMask k) const;

private:
    std::vector<Branch> branches_;
};

/// t-order of f(x(t), y(t)); nullopt when the composition vanishes modulo
/// t^T (the value is at least the truncation).
std::optional<int> valuation(const BivariatePoly& f, const Branch& b);

/// h(v) = dim O / J(v), computed as the rank of the evaluation map from
/// monomials of total degree < max_i v_i to the jets C[t]/t^{v_i} of all
/// branches. Negative coordinates are clamped to zero first.
/// Throws InsufficientTruncation when some branch is known to fewer than
/// max_i v_i terms.
int h_oracle(const Curve& c, const LatticePoint& v);

/// Monomial rows x^a y^b with a + b < `degree_bound`, ordered by total
/// degree and then by increasing a. Exposed for the cutoff property test.
int h_oracle_with_degree_bound(const Curve& c, const LatticePoint& v, int degree_bound);

/// The stabilized value of n|K| - h(n e_K) along the diagonal of the
/// sub-curve C_K, i.e. delta(C_K). Accepted once the defect is constant at
/// `window` consecutive diagonal points, with window = max(4, m + 1) and m
/// the largest multiplicity among the branches of K.
/// Throws NonStabilizing when the truncation is exhausted first.
int diagonal_delta(const Curve& c, SubsetMask k);

/// (C_i, C_j) = delta(C_{ij}) - delta(C_i) - delta(C_j).
int intersection_multiplicity(const Curve& c, int i, int j);

}  // namespace curvelat
