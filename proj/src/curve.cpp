#include "curvelat/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "curvelat/errors.hpp"
#include "curvelat/matrix.hpp"

namespace curvelat {

std::string to_string(const LatticePoint& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

LatticePoint shift(const LatticePoint& v, SubsetMask k) {
    LatticePoint out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (k.contains(static_cast<int>(i))) ++out[i];
    return out;
}

LatticePoint clamp_nonneg(const LatticePoint& v) {
    LatticePoint out = v;
    for (int& x : out) x = std::max(x, 0);
    return out;
}

int norm(const LatticePoint& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool dominates(const LatticePoint& a, const LatticePoint& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

BivariatePoly::BivariatePoly(std::map<std::pair<int, int>, Rational> terms) {
    for (auto& [k, c] : terms)
        if (!is_zero(c)) terms_.emplace(k, std::move(c));
}

BivariatePoly BivariatePoly::monomial(int a, int b, const Rational& c) {
    std::map<std::pair<int, int>, Rational> terms;
    terms.emplace(std::make_pair(a, b), c);
    return BivariatePoly(std::move(terms));
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& other) const {
    auto out = terms_;
    for (const auto& [k, c] : other.terms_) out[k] += c;
    return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& other) const {
    auto out = terms_;
    for (const auto& [k, c] : other.terms_) out[k] -= c;
    return BivariatePoly(std::move(out));
}

Branch::Branch(TruncSeries x, TruncSeries y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.is_zero() && y_.is_zero()) {
        throw InvalidBranch("both components vanish modulo the truncation");
    }
    auto ox = x_.order();
    auto oy = y_.order();
    if ((ox && *ox < 1) || (oy && *oy < 1)) {
        throw InvalidBranch("parametrization does not pass through the origin");
    }
    int g = 0;
    for (const auto* s : {&x_, &y_})
        for (const auto& [e, c] : s->coefficients()) g = std::gcd(g, e);
    if (g != 1) {
        throw InvalidBranch("parametrization is not primitive (all exponents divisible by " +
                            std::to_string(g) + ")");
    }
    multiplicity_ = std::min(ox.value_or(x_.truncation()), oy.value_or(y_.truncation()));
}

Curve::Curve(std::vector<Branch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw InvalidCurve("a curve needs at least one branch");
    if (branches_.size() > 16) throw InvalidCurve("at most 16 branches are supported");
    for (std::size_t i = 0; i < branches_.size(); ++i)
        for (std::size_t j = i + 1; j < branches_.size(); ++j)
            if (branches_[i] == branches_[j])
                throw InvalidCurve("branches " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " coincide");
}

int Curve::truncation() const {
    int t = branches_.front().truncation();
    for (const auto& b : branches_) t = std::min(t, b.truncation());
    return t;
}

Curve Curve::subcurve(SubsetMask k) const {
    std::vector<Branch> picked;
    for (int i : k.elements()) {
        if (i >= r()) throw std::out_of_range("subset refers to a missing branch");
        picked.push_back(branches_[i]);
    }
    return Curve(std::move(picked));
}

std::optional<int> valuation(const BivariatePoly& f, const Branch& b) {
    const int trunc = b.truncation();
    TruncSeries sum(trunc);
    for (const auto& [ab, c] : f.terms()) {
        TruncSeries term = series_mul(series_pow(b.x().truncated(trunc), ab.first),
                                      series_pow(b.y().truncated(trunc), ab.second));
        sum = series_add(sum, series_scale(term, c));
    }
    return sum.order();
}

namespace {

// Powers p^0, ..., p^{count-1} modulo t^trunc.
std::vector<TruncSeries> powers(const TruncSeries& p, int count, int trunc) {
    std::vector<TruncSeries> out;
    out.reserve(count);
    TruncSeries base = p.truncated(trunc);
    TruncSeries acc = TruncSeries::constant(Rational(1), trunc);
    for (int k = 0; k < count; ++k) {
        out.push_back(acc);
        acc = series_mul(acc, base);
    }
    return out;
}

}  // namespace

int h_oracle_with_degree_bound(const Curve& c, const LatticePoint& v_in, int degree_bound) {
    if (static_cast<int>(v_in.size()) != c.r()) {
        throw std::invalid_argument("lattice point has wrong dimension");
    }
    const LatticePoint v = clamp_nonneg(v_in);
    const int top = *std::max_element(v.begin(), v.end());
    if (top == 0) return 0;
    for (int i = 0; i < c.r(); ++i) {
        if (c.branch(i).truncation() < top) {
            throw InsufficientTruncation("h" + to_string(v) + " needs every branch known to t^" +
                                         std::to_string(top) + ", branch " +
                                         std::to_string(i + 1) + " has truncation " +
                                         std::to_string(c.branch(i).truncation()));
        }
    }

    struct Jets {
        std::vector<TruncSeries> xp, yp;
    };
    std::vector<Jets> jets;
    int columns = 0;
    for (int i = 0; i < c.r(); ++i) {
        jets.push_back({powers(c.branch(i).x(), degree_bound, std::max(v[i], 1)),
                        powers(c.branch(i).y(), degree_bound, std::max(v[i], 1))});
        columns += v[i];
    }

    std::vector<std::pair<int, int>> monomials;
    for (int d = 0; d < degree_bound; ++d)
        for (int a = 0; a <= d; ++a) monomials.emplace_back(a, d - a);

    RatMatrix m(monomials.size(), columns);
    for (std::size_t row = 0; row < monomials.size(); ++row) {
        auto [a, b] = monomials[row];
        int col = 0;
        for (int i = 0; i < c.r(); ++i) {
            if (v[i] == 0) continue;
            TruncSeries value = series_mul(jets[i].xp[a], jets[i].yp[b]);
            for (const auto& [e, coeff] : value.coefficients()) m(row, col + e) = coeff;
            col += v[i];
        }
    }
    return static_cast<int>(rank_rational(m));
}

int h_oracle(const Curve& c, const LatticePoint& v) {
    const LatticePoint clamped = clamp_nonneg(v);
    const int top = clamped.empty() ? 0 : *std::max_element(clamped.begin(), clamped.end());
    return h_oracle_with_degree_bound(c, clamped, top);
}

int diagonal_delta(const Curve& c, SubsetMask k) {
    int window = 4;
    for (int i : k.elements()) window = std::max(window, c.branch(i).multiplicity() + 1);
    const int limit = c.truncation();
    int previous = -1;
    int run = 0;
    for (int n = 0; n <= limit; ++n) {
        LatticePoint v(c.r(), 0);
        for (int i : k.elements()) v[i] = n;
        const int defect = n * k.size() - h_oracle(c, v);
        run = (defect == previous) ? run + 1 : 1;
        previous = defect;
        if (run >= window) return defect;
    }
    throw NonStabilizing("|v| - h(v) did not stabilize along the diagonal of branches " +
                         std::to_string(k.bits()) + " within truncation " +
                         std::to_string(limit) +
                         " (coincident branches or truncation too small)");
}

int intersection_multiplicity(const Curve& c, int i, int j) {
    if (i == j) throw std::invalid_argument("intersection multiplicity needs two distinct branches");
    const int dij = diagonal_delta(c, SubsetMask::single(i).with(j));
    return dij - diagonal_delta(c, SubsetMask::single(i)) - diagonal_delta(c, SubsetMask::single(j));
}

}  // namespace curvelat
