#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "curvelat/hilbert.hpp"
#include "curvelat/laurent.hpp"

namespace curvelat {

/// Integer series in t_1..t_r (and optionally q) known on the box [lo, hi].
///
/// Exponents below `lo` or above `hi` are unknown, not zero; reading them
/// throws OutOfBox. Zero coefficients are never stored.
class BoxSeries {
public:
    using Key = std::pair<LatticePoint, int>;  // (t-exponents, q-exponent)

    BoxSeries(LatticePoint lo, LatticePoint hi, bool has_q = false);
    static BoxSeries over(const LatticePoint& corner, bool has_q = false);

    int r() const noexcept { return static_cast<int>(hi_.size()); }
    bool has_q() const noexcept { return has_q_; }
    const LatticePoint& lo() const noexcept { return lo_; }
    const LatticePoint& hi() const noexcept { return hi_; }
    bool in_box(const LatticePoint& v) const;

    const std::map<Key, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coefficient(const LatticePoint& v, int q = 0) const;
    void add(const LatticePoint& v, int q, const BigInt& c);
    void set(const LatticePoint& v, int q, const BigInt& c);

    /// The q-polynomial sitting at t^v.
    LaurentPoly q_coefficient(const LatticePoint& v) const;

    /// Same terms, narrower box; terms outside are dropped.
    BoxSeries restricted_to(const LatticePoint& lo, const LatticePoint& hi) const;

    /// Canonical rendering: terms in ascending lexicographic order of
    /// (t-exponents, q-exponent), e.g. "1 - t*q + t^2*q" or "1 + t1*t2^3".
    /// The zero series renders as "0".
    std::string to_string() const;

    /// Inverse of to_string for the given box. Throws ParseError.
    static BoxSeries parse(std::string_view text, const LatticePoint& lo, const LatticePoint& hi,
                           bool has_q = false);

    friend bool operator==(const BoxSeries&, const BoxSeries&) = default;

private:
    void check(const LatticePoint& v) const;

    LatticePoint lo_;
    LatticePoint hi_;
    bool has_q_;
    std::map<Key, BigInt> terms_;
};

/// Variable names used in canonical strings: "t" when r = 1, else t1..tr.
std::string variable_name(int r, int i);

/// h(v) for v in the table box.
BoxSeries hilbert_series(const HilbertTable& t);

/// pi(v) = sum_K (-1)^(|K|-1) h(v + e_K) on [0, corner - e].
BoxSeries poincare_from_hilbert(const HilbertTable& t);

/// Poincaré series of every sub-curve C_K, K nonempty, read from the
/// corresponding slice of the table.
std::map<SubsetMask, BoxSeries> subcurve_poincare(const HilbertTable& t);

/// h(v) = sum_{K != 0} (-1)^(|K|-1) sum_{0 <= u <= v_K - e_K} pi^K(u) on
/// [0, corner]. `pk` must hold P^K for every nonempty K, each covering
/// corner_K - e_K.
HilbertTable hilbert_from_poincare(const std::map<SubsetMask, BoxSeries>& pk,
                                   const LatticePoint& corner);

/// Multiplies the Laurent extension of H (h(v) = h(max(v, 0))) by
/// -prod (1 - t_i^{-1}) and compares with P on [-e, corner - e]; P is zero
/// wherever a coordinate is negative.
bool hpc_identity_check(const HilbertTable& t);

/// H_v(q) = sum_K (-1)^|K| (q^h(v+e_K) - q^h(v)) / (1 - q). Throws
/// ConsistencyError if the division is not exact.
LaurentPoly motivic_coefficient(const HilbertTable& t, const LatticePoint& v);

/// P_g on [0, corner - e].
BoxSeries motivic_series(const HilbertTable& t);

/// P_g * prod_i (1 - t_i q), restricted to [0, l]. Every coefficient with
/// some exponent above l_i must vanish, otherwise PolynomialityViolation.
/// The motivic box must extend past l in every coordinate.
BoxSeries motivic_normalized(const BoxSeries& pg, const CurveInvariants& inv);

/// Coefficient reflection of the normalized series:
/// c(v, m) == c(l - v, m - |v| + delta) for every term.
bool functional_equation_check(const BoxSeries& pbar, const CurveInvariants& inv);

/// Sets q = 1.
BoxSeries specialize_q1(const BoxSeries& pg);

/// (-1)^h(v) H_v(-t) has non-negative coefficients at every box point.
bool motivic_nonnegativity_check(const HilbertTable& t);

struct AlexanderPoly {
    BoxSeries poly;
    bool single_branch = true;
    /// Coefficient reflection that holds on the computed polynomial:
    /// "mu-k" for one branch; "l-e-v" or "l-v" otherwise; "none" if neither.
    std::string reflection;
    /// c(reflected) == reflection_sign * c(v); (-1)^r for several branches.
    int reflection_sign = 1;
};

/// One branch: P(t)(1 - t), with every coefficient beyond mu required to
/// vanish. Several branches: P itself, with every coefficient outside
/// [0, l] required to vanish. Throws SupportViolation otherwise.
AlexanderPoly alexander(const HilbertTable& t, const CurveInvariants& inv);

/// Drops the first branch: P(1, t_2, ..., t_r) == (1 - t_2^{c_2} ... t_r^{c_r})
/// * P^{K_0 - 1}(t_2, ..., t_r) with c_j = (C_1, C_j), coefficientwise on
/// the box. For two branches this is the familiar product form with a
/// single geometric factor. Requires r >= 2.
bool torres_restriction_check(const HilbertTable& t, const CurveInvariants& inv);

}  // namespace curvelat
