#include "curvelat/series.hpp"

#include <cctype>
#include <climits>
#include <sstream>

#include "curvelat/errors.hpp"

namespace curvelat {

BoxSeries::BoxSeries(LatticePoint lo, LatticePoint hi, bool has_q)
    : lo_(std::move(lo)), hi_(std::move(hi)), has_q_(has_q) {
    if (lo_.size() != hi_.size()) throw std::invalid_argument("box corners differ in dimension");
}

BoxSeries BoxSeries::over(const LatticePoint& corner, bool has_q) {
    return BoxSeries(LatticePoint(corner.size(), 0), corner, has_q);
}

bool BoxSeries::in_box(const LatticePoint& v) const {
    if (v.size() != hi_.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < lo_[i] || v[i] > hi_[i]) return false;
    return true;
}

void BoxSeries::check(const LatticePoint& v) const {
    if (!in_box(v)) {
        throw OutOfBox("exponent " + curvelat::to_string(v) + " outside the series box " +
                       curvelat::to_string(lo_) + ".." + curvelat::to_string(hi_));
    }
}

BigInt BoxSeries::coefficient(const LatticePoint& v, int q) const {
    check(v);
    auto it = terms_.find({v, q});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BoxSeries::add(const LatticePoint& v, int q, const BigInt& c) {
    check(v);
    if (!has_q_ && q != 0) throw std::invalid_argument("q-exponent on a series without q");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({v, q}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void BoxSeries::set(const LatticePoint& v, int q, const BigInt& c) {
    check(v);
    terms_.erase({v, q});
    add(v, q, c);
}

LaurentPoly BoxSeries::q_coefficient(const LatticePoint& v) const {
    check(v);
    LaurentPoly out;
    for (auto it = terms_.lower_bound({v, INT_MIN}); it != terms_.end() && it->first.first == v; ++it)
        out.add_term(it->first.second, it->second);
    return out;
}

BoxSeries BoxSeries::restricted_to(const LatticePoint& lo, const LatticePoint& hi) const {
    BoxSeries out(lo, hi, has_q_);
    for (const auto& [key, c] : terms_)
        if (out.in_box(key.first)) out.terms_.emplace(key, c);
    return out;
}

std::string variable_name(int r, int i) {
    return r == 1 ? std::string("t") : "t" + std::to_string(i + 1);
}

namespace {

void append_factor(std::string& out, const std::string& name, int exponent) {
    if (exponent == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (exponent != 1) out += "^" + std::to_string(exponent);
}

}  // namespace

std::string BoxSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string mono;
        for (int i = 0; i < r(); ++i) append_factor(mono, variable_name(r(), i), key.first[i]);
        append_factor(mono, "q", key.second);
        const bool negative = c < 0;
        const BigInt magnitude = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += curvelat::to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += curvelat::to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

namespace {

class SeriesParser {
public:
    SeriesParser(std::string_view text, int r, bool has_q) : text_(text), r_(r), has_q_(has_q) {}

    template <typename Sink>
    void run(Sink&& sink) {
        skip();
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            term(sign, sink);
            skip();
            if (pos_ == text_.size()) break;
        }
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    BigInt integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    template <typename Sink>
    void term(int sign, Sink&& sink) {
        BigInt coeff = 1;
        LatticePoint exps(r_, 0);
        int q = 0;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            any = true;
            skip();
            if (peek() != '*') {
                sink(exps, q, coeff * sign);
                return;
            }
            get();
            skip();
        }
        while (true) {
            factor(exps, q);
            any = true;
            skip();
            if (peek() != '*') break;
            get();
            skip();
        }
        if (!any) fail("empty term");
        sink(exps, q, coeff * sign);
    }

    void factor(LatticePoint& exps, int& q) {
        int* slot = nullptr;
        if (peek() == 'q' && has_q_) {
            get();
            slot = &q;
        } else if (peek() == 't') {
            get();
            int index = 0;
            if (r_ == 1) {
                index = 0;
            } else {
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
                const BigInt n = integer();
                if (n < 1 || n > r_) fail("variable index out of range");
                index = static_cast<int>(n.get_si()) - 1;
            }
            slot = &exps[index];
        } else {
            fail("expected a variable");
        }
        int e = 1;
        skip();
        if (peek() == '^') {
            get();
            skip();
            int s = 1;
            if (peek() == '-') {
                get();
                s = -1;
            }
            const BigInt n = integer();
            if (!n.fits_sint_p()) fail("exponent too large");
            e = s * static_cast<int>(n.get_si());
        }
        *slot += e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int r_;
    bool has_q_;
};

}  // namespace

BoxSeries BoxSeries::parse(std::string_view text, const LatticePoint& lo, const LatticePoint& hi,
                           bool has_q) {
    BoxSeries out(lo, hi, has_q);
    SeriesParser parser(text, static_cast<int>(hi.size()), has_q);
    parser.run([&](const LatticePoint& v, int q, const BigInt& c) {
        if (!out.in_box(v)) throw ParseError(0, "term " + curvelat::to_string(v) + " outside the box");
        out.add(v, q, c);
    });
    return out;
}

BoxSeries hilbert_series(const HilbertTable& t) {
    BoxSeries out = BoxSeries::over(t.corner());
    for (const auto& v : t.box().points()) out.add(v, 0, t(v));
    return out;
}

BoxSeries poincare_from_hilbert(const HilbertTable& t) {
    const LatticePoint inner = offset(t.corner(), -1);
    for (int x : inner)
        if (x < 0) throw OutOfBox("table too small for the Poincaré series");
    BoxSeries out = BoxSeries::over(inner);
    const std::uint32_t subsets = std::uint32_t{1} << t.r();
    for (const auto& v : BoxIndex(inner).points()) {
        BigInt pi = 0;
        for (std::uint32_t k = 0; k < subsets; ++k) {
            const SubsetMask K(k);
            const int value = t(shift(v, K));
            pi += (K.size() % 2 == 1) ? value : -value;
        }
        out.add(v, 0, pi);
    }
    return out;
}

std::map<SubsetMask, BoxSeries> subcurve_poincare(const HilbertTable& t) {
    std::map<SubsetMask, BoxSeries> out;
    for (std::uint32_t k = 1; k < (std::uint32_t{1} << t.r()); ++k) {
        const SubsetMask K(k);
        out.emplace(K, poincare_from_hilbert(t.restricted(K)));
    }
    return out;
}

HilbertTable hilbert_from_poincare(const std::map<SubsetMask, BoxSeries>& pk,
                                   const LatticePoint& corner) {
    const int r = static_cast<int>(corner.size());
    BoxIndex box(corner);

    // Inclusive prefix sums of every pi^K over its box, indexed like the box.
    struct Prefix {
        std::vector<int> coords;
        BoxIndex index;
        std::vector<BigInt> sums;
    };
    std::vector<Prefix> prefixes;
    for (std::uint32_t k = 1; k < (std::uint32_t{1} << r); ++k) {
        const SubsetMask K(k);
        auto it = pk.find(K);
        if (it == pk.end()) throw std::invalid_argument("missing sub-curve Poincaré series");
        Prefix p{K.elements(), {}, {}};
        LatticePoint top;
        for (int i : p.coords) top.push_back(corner[i] - 1);
        bool empty = false;
        for (int x : top) empty = empty || x < 0;
        if (!empty) {
            p.index = BoxIndex(top);
            p.sums.resize(p.index.size());
            for (std::size_t n = 0; n < p.index.size(); ++n) {
                const LatticePoint u = p.index.point(n);
                BigInt s = it->second.coefficient(u);
                // Inclusion-exclusion over the lower neighbours.
                const int d = static_cast<int>(u.size());
                for (std::uint32_t m = 1; m < (std::uint32_t{1} << d); ++m) {
                    LatticePoint w = u;
                    bool valid = true;
                    for (int a = 0; a < d; ++a) {
                        if ((m >> a) & 1u) {
                            if (--w[a] < 0) valid = false;
                        }
                    }
                    if (!valid) continue;
                    const BigInt& prev = p.sums[p.index.index(w)];
                    if (__builtin_popcount(m) % 2 == 1) s += prev; else s -= prev;
                }
                p.sums[n] = s;
            }
        }
        prefixes.push_back(std::move(p));
    }

    std::vector<int> values(box.size());
    for (std::size_t n = 0; n < box.size(); ++n) {
        const LatticePoint v = box.point(n);
        BigInt h = 0;
        for (const Prefix& p : prefixes) {
            LatticePoint u;
            bool empty = false;
            for (int i : p.coords) {
                u.push_back(v[i] - 1);
                empty = empty || v[i] == 0;
            }
            if (empty) continue;
            const BigInt& s = p.sums[p.index.index(u)];
            if (p.coords.size() % 2 == 1) h += s; else h -= s;
        }
        values[n] = static_cast<int>(h.get_si());
    }
    return HilbertTable(corner, std::move(values));
}

bool hpc_identity_check(const HilbertTable& t) {
    const int r = t.r();
    const LatticePoint lo(r, -2);
    // Laurent H on [-2, corner], then multiply by (1 - t_i^{-1}) one variable
    // at a time; each factor shrinks the known region by one from the top.
    BoxSeries h(lo, t.corner());
    for (const auto& v : BoxIndex(offset(t.corner(), 2)).points()) {
        const LatticePoint w = offset(v, -2);
        h.add(w, 0, t(w));
    }
    LatticePoint hi = t.corner();
    for (int i = 0; i < r; ++i) {
        LatticePoint next_hi = hi;
        --next_hi[i];
        BoxSeries next(lo, next_hi);
        for (const auto& v : BoxIndex(offset(next_hi, 2)).points()) {
            LatticePoint w = offset(v, -2);
            LatticePoint up = w;
            ++up[i];
            next.add(w, 0, h.coefficient(w) - h.coefficient(up));
        }
        h = std::move(next);
        hi = next_hi;
    }
    const BoxSeries p = poincare_from_hilbert(t);
    for (const auto& v : BoxIndex(offset(hi, 2)).points()) {
        const LatticePoint w = offset(v, -2);
        bool negative = false;
        for (int x : w) negative = negative || x < 0;
        const BigInt expected = negative ? BigInt(0) : p.coefficient(w);
        if (-h.coefficient(w) != expected) return false;
    }
    return true;
}

LaurentPoly motivic_coefficient(const HilbertTable& t, const LatticePoint& v) {
    const int hv = t(v);
    LaurentPoly numerator;
    for (std::uint32_t k = 0; k < (std::uint32_t{1} << t.r()); ++k) {
        const SubsetMask K(k);
        const BigInt sign = K.size() % 2 ? -1 : 1;
        numerator.add_term(t(shift(v, K)), sign);
        numerator.add_term(hv, -sign);
    }
    LaurentPoly quotient;
    const LaurentPoly one_minus_q = LaurentPoly::monomial(0) - LaurentPoly::monomial(1);
    if (!numerator.divide_exact(one_minus_q, quotient)) {
        throw ConsistencyError("H_v(q) at " + to_string(v) + " is not divisible by 1 - q");
    }
    return quotient;
}

BoxSeries motivic_series(const HilbertTable& t) {
    const LatticePoint inner = offset(t.corner(), -1);
    for (int x : inner)
        if (x < 0) throw OutOfBox("table too small for the motivic series");
    BoxSeries out = BoxSeries::over(inner, true);
    for (const auto& v : BoxIndex(inner).points()) {
        const LaurentPoly hv = motivic_coefficient(t, v);
        for (const auto& [m, c] : hv.terms()) out.add(v, m, c);
    }
    return out;
}

BoxSeries motivic_normalized(const BoxSeries& pg, const CurveInvariants& inv) {
    const int r = pg.r();
    for (int i = 0; i < r; ++i) {
        if (pg.hi()[i] <= inv.conductor[i]) {
            throw OutOfBox("motivic series must extend past the conductor to test polynomiality");
        }
    }
    // Multiply by (1 - t_i q) for each i in turn.
    BoxSeries acc = pg;
    for (int i = 0; i < r; ++i) {
        BoxSeries next(pg.lo(), pg.hi(), true);
        for (const auto& [key, c] : acc.terms()) {
            next.add(key.first, key.second, c);
            LatticePoint up = key.first;
            ++up[i];
            if (next.in_box(up)) next.add(up, key.second + 1, -c);
        }
        acc = std::move(next);
    }
    for (const auto& [key, c] : acc.terms()) {
        if (!dominates(inv.conductor, key.first)) {
            throw PolynomialityViolation("normalized motivic coefficient at " +
                                         to_string(key.first) + ", q^" +
                                         std::to_string(key.second) + " is " +
                                         curvelat::to_string(c));
        }
    }
    return acc.restricted_to(LatticePoint(r, 0), inv.conductor);
}

bool functional_equation_check(const BoxSeries& pbar, const CurveInvariants& inv) {
    for (const auto& [key, c] : pbar.terms()) {
        LatticePoint mirror(key.first.size());
        for (std::size_t i = 0; i < mirror.size(); ++i) mirror[i] = inv.conductor[i] - key.first[i];
        if (!pbar.in_box(mirror)) return false;
        const int m = key.second - norm(key.first) + inv.delta;
        if (pbar.coefficient(mirror, m) != c) return false;
    }
    return true;
}

BoxSeries specialize_q1(const BoxSeries& pg) {
    BoxSeries out(pg.lo(), pg.hi(), false);
    for (const auto& [key, c] : pg.terms()) out.add(key.first, 0, c);
    return out;
}

bool motivic_nonnegativity_check(const HilbertTable& t) {
    for (const auto& v : BoxIndex(offset(t.corner(), -1)).points()) {
        LaurentPoly p = motivic_coefficient(t, v).substitute(-1, 1);
        if (t(v) % 2) p = -p;
        for (const auto& [e, c] : p.terms())
            if (c < 0) return false;
    }
    return true;
}

namespace {

bool reflection_holds(const BoxSeries& s, const LatticePoint& centre, int sign) {
    for (const auto& [key, c] : s.terms()) {
        LatticePoint mirror(key.first.size());
        for (std::size_t i = 0; i < mirror.size(); ++i) mirror[i] = centre[i] - key.first[i];
        if (!s.in_box(mirror) || s.coefficient(mirror) != sign * c) return false;
    }
    return true;
}

}  // namespace

AlexanderPoly alexander(const HilbertTable& t, const CurveInvariants& inv) {
    const BoxSeries p = poincare_from_hilbert(t);
    const int r = t.r();
    AlexanderPoly out{BoxSeries::over(inv.conductor), r == 1, "none"};
    if (r == 1) {
        const int top = p.hi()[0];
        if (top <= inv.mu) throw OutOfBox("box must extend past mu for the Alexander polynomial");
        for (int k = 0; k <= top; ++k) {
            BigInt c = p.coefficient({k});
            if (k > 0) c -= p.coefficient({k - 1});
            if (c == 0) continue;
            if (k > inv.mu) {
                throw SupportViolation("coefficient of t^" + std::to_string(k) +
                                       " in P(t)(1-t) is nonzero beyond mu");
            }
            out.poly.add({k}, 0, c);
        }
        out.poly = out.poly.restricted_to({0}, {inv.mu});
        if (reflection_holds(out.poly, {inv.mu}, 1)) out.reflection = "mu-k";
        return out;
    }
    for (int i = 0; i < r; ++i)
        if (p.hi()[i] <= inv.conductor[i])
            throw OutOfBox("box must extend past the conductor for the Alexander polynomial");
    for (const auto& [key, c] : p.terms()) {
        if (!dominates(inv.conductor, key.first)) {
            throw SupportViolation("Poincaré coefficient at " + to_string(key.first) +
                                   " outside the conductor box");
        }
        out.poly.add(key.first, 0, c);
    }
    out.reflection_sign = r % 2 ? -1 : 1;
    if (reflection_holds(out.poly, offset(inv.conductor, -1), out.reflection_sign)) {
        out.reflection = "l-e-v";
    } else if (reflection_holds(out.poly, inv.conductor, out.reflection_sign)) {
        out.reflection = "l-v";
    }
    return out;
}

bool torres_restriction_check(const HilbertTable& t, const CurveInvariants& inv) {
    const int r = t.r();
    if (r < 2) throw std::invalid_argument("restriction needs at least two branches");
    const BoxSeries p = poincare_from_hilbert(t);
    for (int i = 0; i < r; ++i)
        if (p.hi()[i] <= inv.conductor[i])
            throw OutOfBox("box must extend past the conductor for the restriction check");

    const SubsetMask rest = SubsetMask::full(r).without(0);
    const BoxSeries lower = poincare_from_hilbert(t.restricted(rest));

    LatticePoint c(r - 1);
    for (int j = 1; j < r; ++j) c[j - 1] = inv.pairwise[0][j];

    for (const auto& w : BoxIndex(lower.hi()).points()) {
        BigInt at_one = 0;
        for (int v1 = 0; v1 <= p.hi()[0]; ++v1) {
            LatticePoint v{v1};
            v.insert(v.end(), w.begin(), w.end());
            at_one += p.coefficient(v);
        }
        BigInt expected = lower.coefficient(w);
        LatticePoint back(w.size());
        bool inside = true;
        for (std::size_t a = 0; a < w.size(); ++a) {
            back[a] = w[a] - c[a];
            inside = inside && back[a] >= 0;
        }
        if (inside) expected -= lower.coefficient(back);
        if (at_one != expected) return false;
    }
    return true;
}

}  // namespace curvelat
