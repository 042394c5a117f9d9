#include "curvelat/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace curvelat {

LaurentPoly::LaurentPoly(std::map<int, BigInt> terms) {
    for (auto& [e, c] : terms)
        if (sgn(c) != 0) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& c) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) out.add_term(a + b, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::substitute(int sign, int power) const {
    if ((sign != 1 && sign != -1) || (power != 1 && power != -1)) {
        throw std::invalid_argument("substitute supports x -> +-x^(+-1) only");
    }
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        BigInt coeff = (sign == -1 && (e % 2 != 0)) ? BigInt(-c) : c;
        out.add_term(e * power, coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
}

BigInt LaurentPoly::evaluate(int x) const {
    if (x != 1 && x != -1) throw std::invalid_argument("evaluate supports x = +-1 only");
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += (x == -1 && (e % 2 != 0)) ? BigInt(-c) : c;
    return sum;
}

bool LaurentPoly::divide_exact(const LaurentPoly& divisor, LaurentPoly& quotient) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const int d_low = divisor.min_degree();
    const BigInt& lead = divisor.terms_.begin()->second;
    if (lead != 1 && lead != -1) throw std::invalid_argument("divisor must have a unit low coefficient");
    quotient = LaurentPoly();
    LaurentPoly rem = *this;
    const int span = divisor.max_degree() - d_low;
    // Ascending division: cancel the lowest term of the remainder while its
    // degree leaves room for the divisor below the top of the dividend.
    while (!rem.is_zero()) {
        const int e = rem.min_degree();
        if (e + span > rem.max_degree()) break;
        BigInt c = rem.terms_.begin()->second * lead;  // lead^-1 == lead for units
        quotient.add_term(e - d_low, c);
        rem = rem - divisor.shifted(e - d_low) * LaurentPoly::monomial(0, c);
    }
    return rem.is_zero();
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt magnitude = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << magnitude.get_str();
            continue;
        }
        if (magnitude != 1) os << magnitude.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace curvelat
