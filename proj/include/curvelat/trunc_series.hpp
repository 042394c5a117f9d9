#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "curvelat/rational.hpp"

namespace curvelat {

/// A univariate power series in t known modulo t^T.
///
/// Only nonzero coefficients with exponent below the truncation are stored,
/// so two series compare equal iff they have the same truncation and the
/// same coefficient map.
class TruncSeries {
public:
    explicit TruncSeries(int truncation = 0);
    TruncSeries(std::map<int, Rational> coefficients, int truncation);

    static TruncSeries constant(const Rational& c, int truncation);
    static TruncSeries monomial(int exponent, const Rational& c, int truncation);

    int truncation() const noexcept { return truncation_; }
    const std::map<int, Rational>& coefficients() const noexcept { return coeffs_; }

    Rational coefficient(int exponent) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Lowest exponent with a nonzero coefficient; nullopt when the series
    /// vanishes modulo t^T.
    std::optional<int> order() const;

    /// Reduces modulo t^T' for T' <= truncation().
    TruncSeries truncated(int truncation) const;

    std::string to_string() const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::map<int, Rational> coeffs_;
    int truncation_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, const Rational& c);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_pow(const TruncSeries& a, int exponent);

/// Parses a polynomial in t over the rationals:
///
///     expr  := term (('+'|'-') term)*
///     term  := [coeff '*'] 't' ['^' nat] | coeff
///     coeff := int | int '/' posint
///
/// Whitespace is ignored. A leading sign is accepted on the first term.
/// Terms at or above the truncation are dropped.
TruncSeries parse_poly(std::string_view text, int truncation);

}  // namespace curvelat
