#pragma once

#include <map>
#include <string>

#include "curvelat/rational.hpp"

namespace curvelat {

/// Integer Laurent polynomial in one variable. Used for characteristic
/// polynomials, arrangement Poincaré polynomials, the motivic coefficients
/// H_v(q) and Poincaré polynomials of graded homology.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, BigInt> terms);

    static LaurentPoly monomial(int exponent, const BigInt& c = 1);

    const std::map<int, BigInt>& terms() const noexcept { return terms_; }
    BigInt coefficient(int exponent) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    int min_degree() const;  // requires !is_zero()
    int max_degree() const;  // requires !is_zero()

    void add_term(int exponent, const BigInt& c);

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator-() const;

    /// p(x) -> p(c * x^k) for c = +-1, k = +-1.
    LaurentPoly substitute(int sign, int power) const;

    /// Multiplies by x^shift.
    LaurentPoly shifted(int shift) const;

    BigInt evaluate(int x) const;  // x = +-1 only

    /// Exact division by a polynomial whose lowest-degree coefficient is +-1.
    /// Returns false when a nonzero remainder is left.
    bool divide_exact(const LaurentPoly& divisor, LaurentPoly& quotient) const;

    /// Renders with variable name `var`, ascending exponents,
    /// e.g. "1 - 2*t + t^2". The zero polynomial renders as "0".
    std::string to_string(const std::string& var = "t") const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, BigInt> terms_;
};

}  // namespace curvelat
