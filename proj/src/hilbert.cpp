#include "curvelat/hilbert.hpp"

#include <algorithm>
#include <cstdint>

#include "curvelat/errors.hpp"

namespace curvelat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool sampled(const LatticePoint& v, int percent) {
    if (percent >= 100) return true;
    if (percent <= 0) return false;
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (int x : v) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)));
    return static_cast<int>(h % 100) < percent;
}

bool is_axis_point(const LatticePoint& v) {
    return std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }) <= 1;
}

// Enumerates u with u_i = v_i and v_j <= u_j <= top_j for j != i.
template <typename Fn>
bool any_in_upper_slab(const LatticePoint& v, const LatticePoint& top, int fixed, Fn&& pred) {
    LatticePoint u = v;
    const int r = static_cast<int>(v.size());
    while (true) {
        if (pred(u)) return true;
        int j = 0;
        for (; j < r; ++j) {
            if (j == fixed) continue;
            if (u[j] < top[j]) {
                ++u[j];
                break;
            }
            u[j] = v[j];
        }
        if (j == r) return false;
    }
}

}  // namespace

CurveInvariants invariants(const Curve& c) {
    CurveInvariants inv;
    inv.r = c.r();
    inv.delta_i.resize(inv.r);
    inv.mu_i.resize(inv.r);
    inv.pairwise.assign(inv.r, std::vector<int>(inv.r, 0));
    for (int i = 0; i < inv.r; ++i) {
        inv.delta_i[i] = diagonal_delta(c, SubsetMask::single(i));
        inv.mu_i[i] = 2 * inv.delta_i[i];
    }
    for (int i = 0; i < inv.r; ++i) {
        for (int j = i + 1; j < inv.r; ++j) {
            const int dij = diagonal_delta(c, SubsetMask::single(i).with(j));
            const int cij = dij - inv.delta_i[i] - inv.delta_i[j];
            if (cij <= 0) {
                throw ConsistencyError("non-positive intersection multiplicity between branches " +
                                       std::to_string(i + 1) + " and " + std::to_string(j + 1));
            }
            inv.pairwise[i][j] = inv.pairwise[j][i] = cij;
        }
    }
    inv.delta = 0;
    for (int i = 0; i < inv.r; ++i) {
        inv.delta += inv.delta_i[i];
        for (int j = i + 1; j < inv.r; ++j) inv.delta += inv.pairwise[i][j];
    }
    inv.mu = 2 * inv.delta - inv.r + 1;
    inv.conductor.assign(inv.r, 0);
    for (int i = 0; i < inv.r; ++i) {
        inv.conductor[i] = inv.mu_i[i];
        for (int j = 0; j < inv.r; ++j)
            if (j != i) inv.conductor[i] += inv.pairwise[j][i];
    }

    // Scan check: above the conductor h(v) = |v| - delta.
    for (std::uint32_t k = 0; k < (std::uint32_t{1} << inv.r); ++k) {
        const LatticePoint v = shift(inv.conductor, SubsetMask(k));
        if (h_oracle(c, v) != norm(v) - inv.delta) {
            throw ConsistencyError("h" + to_string(v) + " differs from |v| - delta at the conductor");
        }
    }
    return inv;
}

HilbertTable::HilbertTable(LatticePoint corner, std::vector<int> values, TableBuildStats stats)
    : index_(std::move(corner)), values_(std::move(values)), stats_(stats) {
    if (values_.size() != index_.size()) throw std::invalid_argument("table size mismatch");
}

bool HilbertTable::covers(const LatticePoint& v) const {
    return index_.contains(clamp_nonneg(v));
}

int HilbertTable::operator()(const LatticePoint& v) const {
    const LatticePoint w = clamp_nonneg(v);
    if (!index_.contains(w)) {
        throw OutOfBox("h" + to_string(v) + " requested outside the table box " +
                       to_string(corner()));
    }
    return values_[index_.index(w)];
}

HilbertTable HilbertTable::restricted(SubsetMask k) const {
    const auto coords = k.elements();
    LatticePoint sub_corner;
    for (int i : coords) sub_corner.push_back(corner().at(i));
    BoxIndex sub(sub_corner);
    std::vector<int> values(sub.size());
    for (std::size_t n = 0; n < sub.size(); ++n) {
        const LatticePoint u = sub.point(n);
        LatticePoint v(r(), 0);
        for (std::size_t a = 0; a < coords.size(); ++a) v[coords[a]] = u[a];
        values[n] = (*this)(v);
    }
    return HilbertTable(sub_corner, std::move(values));
}

HilbertTable build_table(const Curve& c, const LatticePoint& corner, const CurveInvariants& inv,
                         const TableBuildOptions& options) {
    if (static_cast<int>(corner.size()) != c.r()) throw std::invalid_argument("corner dimension");
    const LatticePoint& l = inv.conductor;
    const int r = c.r();
    TableBuildStats stats;

    BoxIndex core(l);
    std::vector<int> h(core.size(), -1);
    std::vector<char> member(core.size(), 0);
    auto at = [&](const LatticePoint& u) -> int& { return h[core.index(u)]; };

    auto order = options.order == FillOrder::RowMajor ? core.points() : core.points_column_major();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const LatticePoint& v = *it;

        // jump_from_s[i]: some u != v in S with u_i = v_i and u >= v.
        std::vector<char> jump_from_s(r, 0);
        for (int i = 0; i < r; ++i) {
            jump_from_s[i] = any_in_upper_slab(v, l, i, [&](const LatticePoint& u) {
                return u != v && member[core.index(u)];
            });
        }

        int value = -1;
        if (!is_axis_point(v)) {
            for (int i = 0; i < r; ++i) {
                if (!jump_from_s[i] || v[i] == l[i]) continue;
                const int candidate = at(shift(v, SubsetMask::single(i))) - 1;
                if (value >= 0 && candidate != value) {
                    throw ConsistencyError("jump criterion gives two values for h" + to_string(v));
                }
                value = candidate;
            }
        }
        if (value < 0) {
            value = h_oracle(c, v);
            ++stats.oracle_seeds;
        } else {
            ++stats.recursion_steps;
        }
        at(v) = value;

        bool in_s = true;
        std::vector<char> jumps(r);
        for (int i = 0; i < r; ++i) {
            if (v[i] == l[i]) {
                jumps[i] = 1;  // l itself witnesses the jump
                continue;
            }
            const int step = at(shift(v, SubsetMask::single(i))) - value;
            if (step != 0 && step != 1) {
                throw ConsistencyError("unit step of h at " + to_string(v) + " is " +
                                       std::to_string(step));
            }
            jumps[i] = static_cast<char>(step);
            in_s = in_s && step == 1;
        }
        for (int i = 0; i < r; ++i) in_s = in_s && jumps[i];
        member[core.index(v)] = in_s;
        for (int i = 0; i < r; ++i) {
            if (static_cast<bool>(jumps[i]) != (jump_from_s[i] || in_s)) {
                throw ConsistencyError("jump criterion violated at " + to_string(v) +
                                       " in direction " + std::to_string(i + 1));
            }
        }
    }

    BoxIndex box(corner);
    std::vector<int> values(box.size());
    for (std::size_t n = 0; n < box.size(); ++n) {
        const LatticePoint v = box.point(n);
        LatticePoint w(r);
        int excess = 0;
        for (int i = 0; i < r; ++i) {
            w[i] = std::min(v[i], l[i]);
            excess += std::max(v[i] - l[i], 0);
        }
        values[n] = at(w) + excess;
        if (sampled(v, options.sample_percent)) {
            ++stats.oracle_checks;
            const int expected = h_oracle(c, v);
            if (expected != values[n]) {
                throw ConsistencyError("table value h" + to_string(v) + " = " +
                                       std::to_string(values[n]) + " but the oracle gives " +
                                       std::to_string(expected));
            }
        }
    }
    return HilbertTable(corner, std::move(values), stats);
}

HilbertTable build_table(const Curve& c, const LatticePoint& corner) {
    return build_table(c, corner, invariants(c));
}

HilbertTable oracle_table(const Curve& c, const LatticePoint& corner) {
    BoxIndex box(corner);
    std::vector<int> values(box.size());
    for (std::size_t n = 0; n < box.size(); ++n) values[n] = h_oracle(c, box.point(n));
    TableBuildStats stats;
    stats.oracle_seeds = box.size();
    return HilbertTable(corner, std::move(values), stats);
}

Semigroup::Semigroup(BoxIndex box, std::vector<char> member, LatticePoint conductor)
    : box_(std::move(box)), member_(std::move(member)), conductor_(std::move(conductor)) {}

bool Semigroup::contains(const LatticePoint& v) const {
    if (!box_.contains(v)) {
        throw OutOfBox("semigroup membership of " + to_string(v) + " outside " +
                       to_string(box_.corner()));
    }
    return member_[box_.index(v)];
}

std::vector<LatticePoint> Semigroup::elements() const {
    std::vector<LatticePoint> out;
    for (std::size_t n = 0; n < box_.size(); ++n)
        if (member_[n]) out.push_back(box_.point(n));
    return out;
}

Semigroup semigroup(const HilbertTable& t, const CurveInvariants& inv) {
    const LatticePoint inner = offset(t.corner(), -1);
    for (int x : inner)
        if (x < 0) throw OutOfBox("table too small for semigroup membership");
    BoxIndex box(inner);
    std::vector<char> member(box.size());
    for (std::size_t n = 0; n < box.size(); ++n) {
        const LatticePoint v = box.point(n);
        const int hv = t(v);
        bool in_s = true;
        for (int i = 0; i < t.r() && in_s; ++i) in_s = t(shift(v, SubsetMask::single(i))) > hv;
        member[n] = in_s;
        if (!in_s && dominates(v, inv.conductor)) {
            throw ConsistencyError(to_string(v) + " dominates the conductor but is not in S");
        }
    }
    return Semigroup(std::move(box), std::move(member), inv.conductor);
}

bool symmetry_check(const HilbertTable& t, const CurveInvariants& inv) {
    BoxIndex box(inv.conductor);
    for (std::size_t n = 0; n < box.size(); ++n) {
        const LatticePoint v = box.point(n);
        LatticePoint mirror(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) mirror[i] = inv.conductor[i] - v[i];
        if (t(mirror) - t(v) != inv.delta - norm(v)) return false;
    }
    return true;
}

bool large_n_step_check(const HilbertTable& t, const CurveInvariants& inv) {
    for (int i = 0; i < t.r(); ++i) {
        const int top = inv.conductor[i] + 4;
        if (t.corner()[i] < top) {
            throw OutOfBox("large-n check needs the table to reach " + std::to_string(top) +
                           " along axis " + std::to_string(i + 1));
        }
        for (const LatticePoint& base : t.box().points()) {
            if (base[i] != 0) continue;
            for (int n = inv.conductor[i]; n < top; ++n) {
                LatticePoint a = base, b = base;
                a[i] = n;
                b[i] = n + 1;
                if (t(b) - t(a) != 1) return false;
            }
        }
    }
    return true;
}

LocalMatroid local_matroid(const HilbertTable& t, const LatticePoint& v) {
    const int r = t.r();
    const int hv = t(v);
    std::vector<int> ranks(std::size_t{1} << r);
    for (std::uint32_t k = 0; k < ranks.size(); ++k) ranks[k] = t(shift(v, SubsetMask(k))) - hv;
    return LocalMatroid{v, Matroid(r, std::move(ranks))};
}

LaurentPoly char_poly(const LocalMatroid& m) { return characteristic_polynomial(m.matroid); }

}  // namespace curvelat
