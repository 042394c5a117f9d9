#include "curvelat/rational.hpp"

#include <stdexcept>

namespace curvelat {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace curvelat
