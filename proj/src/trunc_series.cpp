#include "curvelat/trunc_series.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "curvelat/errors.hpp"

namespace curvelat {

TruncSeries::TruncSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation");
    }
}

TruncSeries::TruncSeries(std::map<int, Rational> coefficients, int truncation)
    : TruncSeries(truncation) {
    for (auto& [exponent, c] : coefficients) {
        if (exponent < 0) {
            throw std::invalid_argument("negative exponent in power series");
        }
        if (exponent < truncation_ && !curvelat::is_zero(c)) {
            coeffs_.emplace(exponent, std::move(c));
        }
    }
}

TruncSeries TruncSeries::constant(const Rational& c, int truncation) {
    return monomial(0, c, truncation);
}

TruncSeries TruncSeries::monomial(int exponent, const Rational& c, int truncation) {
    return TruncSeries({{exponent, c}}, truncation);
}

Rational TruncSeries::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<int> TruncSeries::order() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.begin()->first;
}

TruncSeries TruncSeries::truncated(int truncation) const {
    if (truncation > truncation_) {
        throw std::invalid_argument("cannot raise the truncation of a series");
    }
    TruncSeries out(truncation);
    for (const auto& [e, c] : coeffs_) {
        if (e >= truncation) break;
        out.coeffs_.emplace(e, c);
    }
    return out;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational magnitude = abs(c);
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
        os << "t";
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    os << " + O(t^" << truncation_ << ")";
    return os.str();
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    const int trunc = std::min(a.truncation(), b.truncation());
    std::map<int, Rational> out;
    for (const auto& [e, c] : a.coefficients()) out[e] += c;
    for (const auto& [e, c] : b.coefficients()) out[e] += c;
    return TruncSeries(std::move(out), trunc);
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    return series_add(a, series_scale(b, Rational(-1)));
}

TruncSeries series_scale(const TruncSeries& a, const Rational& c) {
    std::map<int, Rational> out;
    for (const auto& [e, x] : a.coefficients()) out.emplace(e, x * c);
    return TruncSeries(std::move(out), a.truncation());
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    const int trunc = std::min(a.truncation(), b.truncation());
    std::map<int, Rational> out;
    for (const auto& [ea, ca] : a.coefficients()) {
        if (ea >= trunc) break;
        for (const auto& [eb, cb] : b.coefficients()) {
            if (ea + eb >= trunc) break;
            out[ea + eb] += ca * cb;
        }
    }
    return TruncSeries(std::move(out), trunc);
}

TruncSeries series_pow(const TruncSeries& a, int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("negative power of a truncated series");
    }
    TruncSeries result = TruncSeries::constant(Rational(1), a.truncation());
    TruncSeries base = a;
    while (exponent > 0) {
        if (exponent & 1) result = series_mul(result, base);
        exponent >>= 1;
        if (exponent > 0) base = series_mul(base, base);
    }
    return result;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int truncation)
        : text_(text), truncation_(truncation) {}

    TruncSeries parse() {
        std::map<int, Rational> terms;
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = (take() == '-') ? -1 : 1;
        }
        parse_term(sign, terms);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') {
                throw ParseError(pos_, std::string("expected '+' or '-', found '") + op + "'");
            }
            take();
            parse_term(op == '-' ? -1 : 1, terms);
        }
        return TruncSeries(std::move(terms), truncation_);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    BigInt parse_nat(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) {
            throw ParseError(start, std::string("expected ") + what);
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    Rational parse_coeff() {
        BigInt num = parse_nat("integer");
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            const std::size_t at = pos_;
            BigInt den = parse_nat("denominator");
            if (sgn(den) == 0) {
                throw ParseError(at, "zero denominator");
            }
            return make_rational(num, den);
        }
        return Rational(num);
    }

    void parse_term(int sign, std::map<int, Rational>& terms) {
        skip_ws();
        Rational coeff(1);
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            has_coeff = true;
            skip_ws();
            if (peek() != '*') {
                terms[0] += sign * coeff;
                return;
            }
            take();
            skip_ws();
        }
        if (peek() != 't') {
            throw ParseError(pos_, has_coeff ? "expected 't' after '*'" : "expected a term");
        }
        take();
        skip_ws();
        long exponent = 1;
        if (peek() == '^') {
            take();
            BigInt e = parse_nat("exponent");
            if (!e.fits_slong_p() || e.get_si() > (1L << 30)) {
                throw ParseError(pos_, "exponent too large");
            }
            exponent = e.get_si();
        }
        terms[static_cast<int>(exponent)] += sign * coeff;
    }

    std::string_view text_;
    int truncation_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncSeries parse_poly(std::string_view text, int truncation) {
    return PolyParser(text, truncation).parse();
}

}  // namespace curvelat
