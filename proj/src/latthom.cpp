#include "curvelat/latthom.hpp"

#include <algorithm>
#include <set>

#include "curvelat/errors.hpp"

namespace curvelat {

namespace {

int position_sign(int p) { return (p % 2 == 1) ? 1 : -1; }  // (-1)^(p-1)

GradedGroup single_class(int degree) {
    GradedGroup g;
    g.set(degree, HomologyGroup{1, {}});
    return g;
}

std::size_t total_rank(const GradedGroup& g) {
    std::size_t n = 0;
    for (const auto& [d, group] : g.groups()) n += group.free_rank;
    return n;
}

}  // namespace

UComplex grv_complex(const HilbertTable& t, const LatticePoint& v) {
    const int r = t.r();
    if (!t.covers(offset(v, 1))) throw OutOfBox("gr_v needs the table to cover v + e");
    const auto order = subsets_by_size(r);
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].bits()] = i;

    std::vector<UComplex::Cell> cells;
    for (SubsetMask k : order) {
        const int weight = t(shift(v, k));
        UComplex::Cell cell{k.size(), weight, {}};
        const auto elems = k.elements();
        for (std::size_t p = 1; p <= elems.size(); ++p) {
            const SubsetMask face = k.without(elems[p - 1]);
            cell.boundary.push_back({pos[face.bits()], -position_sign(static_cast<int>(p)),
                                     weight - t(shift(v, face))});
        }
        cells.push_back(std::move(cell));
    }
    return UComplex(std::move(cells));
}

int grv_u_truncation(int r) { return r + 3; }

GradedGroup grv_homology_direct(const HilbertTable& t, const LatticePoint& v, int u_truncation) {
    return grv_complex(t, v).homology(u_truncation > 0 ? u_truncation : grv_u_truncation(t.r()));
}

LaurentPoly grv_homology_formula(const HilbertTable& t, const LatticePoint& v) {
    const int h = t(v);
    LaurentPoly p = motivic_coefficient(t, v).substitute(-1, -1).shifted(-h);
    return (h % 2) ? -p : p;
}

BoxSeries euler_series(const HilbertTable& t) {
    BoxSeries out = BoxSeries::over(offset(t.corner(), -1));
    for (const auto& v : BoxIndex(out.hi()).points())
        out.add(v, 0, grv_homology_formula(t, v).evaluate(-1));
    return out;
}

LatticePoint sk_corner(const CurveInvariants& inv, int k) {
    LatticePoint c(inv.r);
    for (int i = 0; i < inv.r; ++i) c[i] = std::max(k + inv.delta_i[i] + 1, inv.conductor[i] + 2);
    return c;
}

GradedGroup sk_homology(const HilbertTable& t, const LatticePoint& u, int k) {
    const int r = t.r();
    if (t(u) > k) throw std::invalid_argument("S_k(u) is empty when h(u) > k");
    const LatticePoint& corner = t.corner();

    std::vector<std::map<Cube, std::size_t>> by_dim(r + 1);
    for (const auto& w : t.box().points()) {
        if (!dominates(w, u)) continue;
        const int hw = t(w);
        for (int i = 0; i < r; ++i) {
            if (w[i] == corner[i] && hw <= k) {
                throw BoxTooSmall("S_" + std::to_string(k) + to_string(u) +
                                  " reaches the box boundary at " + to_string(w));
            }
        }
        for (SubsetMask K : subsets_by_size(r)) {
            const LatticePoint top = shift(w, K);
            if (!t.covers(top) || t(top) > k) continue;
            auto& level = by_dim[K.size()];
            const std::size_t next = level.size();
            level.emplace(Cube{w, K}, next);
        }
    }

    std::vector<std::size_t> dims(r + 1);
    for (int d = 0; d <= r; ++d) dims[d] = by_dim[d].size();
    std::vector<SparseIntMatrix> maps;
    maps.emplace_back(0, 0);
    for (int d = 1; d <= r; ++d) {
        SparseIntMatrix m(dims[d - 1], dims[d]);
        for (const auto& [cube, col] : by_dim[d]) {
            const auto elems = cube.directions.elements();
            for (std::size_t p = 1; p <= elems.size(); ++p) {
                const int i = elems[p - 1];
                const SubsetMask rest = cube.directions.without(i);
                const int s = position_sign(static_cast<int>(p));
                m.add(by_dim[d - 1].at(Cube{shift(cube.base, SubsetMask::single(i)), rest}), col, s);
                m.add(by_dim[d - 1].at(Cube{cube.base, rest}), col, -s);
            }
        }
        maps.push_back(std::move(m));
    }
    return chain_homology(dims, maps);
}

bool full_complex_squares_to_zero(const HilbertTable& t) {
    const int r = t.r();
    std::map<Cube, std::size_t> index;
    std::vector<Cube> cubes;
    for (const auto& w : t.box().points())
        for (SubsetMask K : subsets_by_size(r))
            if (t.covers(shift(w, K))) {
                index.emplace(Cube{w, K}, cubes.size());
                cubes.push_back({w, K});
            }
    std::vector<UComplex::Cell> cells;
    for (const Cube& c : cubes) {
        const int weight = t(shift(c.base, c.directions));
        UComplex::Cell cell{c.directions.size(), weight, {}};
        const auto elems = c.directions.elements();
        for (std::size_t p = 1; p <= elems.size(); ++p) {
            const int i = elems[p - 1];
            const SubsetMask rest = c.directions.without(i);
            const int s = position_sign(static_cast<int>(p));
            const LatticePoint far = shift(c.base, SubsetMask::single(i));
            cell.boundary.push_back({index.at({far, rest}), s, weight - t(shift(far, rest))});
            cell.boundary.push_back({index.at({c.base, rest}), -s, weight - t(shift(c.base, rest))});
        }
        cells.push_back(std::move(cell));
    }
    return UComplex(std::move(cells)).squares_to_zero();
}

R1Structure r1_structure(const HilbertTable& t, const CurveInvariants& inv) {
    if (t.r() != 1) throw std::invalid_argument("one-branch structure needs r = 1");
    const int top = t.corner()[0];
    if (top < inv.mu + 3) throw OutOfBox("one-branch structure needs the table to reach mu + 3");
    const int n = top - 2;
    R1Structure out{{}, {}, {}, {}, {}, n, false, false, false, false, false, false,
                    BoxSeries::over({n + 1})};

    auto h = [&](int v) { return t({v}); };
    auto in_s = [&](int v) { return v >= 0 && h(v + 1) > h(v); };  // known for v <= top - 1

    // HL^- in closed form and by Smith normal form.
    out.hl_matches_direct = true;
    std::vector<std::size_t> hl_rank(n + 2);
    std::set<int> direct_support;
    for (int v = 0; v <= n + 1; ++v) {
        const GradedGroup direct = grv_homology_direct(t, {v});
        hl_rank[v] = total_rank(direct);
        if (!direct.is_zero()) direct_support.insert(v);
        const GradedGroup closed = in_s(v) ? single_class(-2 * h(v)) : GradedGroup{};
        if (!(closed == direct)) out.hl_matches_direct = false;
        if (v <= n && in_s(v)) {
            out.hl_support.push_back(v);
            out.hl_degree[v] = -2 * h(v);
            if (in_s(v + 1)) out.u_action[v] = v + 1;
        }
    }

    // E^2 from the semigroup.
    for (int v = 0; v <= n; ++v) {
        if (!in_s(v)) continue;
        if (!in_s(v - 1)) out.e2_closed.push_back({v, 0, -2 * h(v)});
        if (!in_s(v + 1)) out.e2_closed.push_back({v, 1, 1 - 2 * h(v + 1)});
    }

    // E^2 from the U = 0 complex: d0 pairs alpha_v with a_v, d1 pairs the
    // survivors alpha_v with a_{v+1}.
    auto d0_rank = [&](int v) {
        IntMatrix m(1, 1);
        m(0, 0) = (h(v + 1) - h(v) == 0) ? -1 : 0;
        return smith_normal_form(m).rank;
    };
    std::vector<char> survives(n + 2);
    for (int v = 0; v <= n + 1; ++v) survives[v] = d0_rank(v) == 0;
    auto d1_rank = [&](int v) {  // alpha_v -> a_{v+1}
        if (v < 0 || !survives[v] || !survives[v + 1]) return std::size_t{0};
        IntMatrix m(1, 1);
        m(0, 0) = 1;
        return smith_normal_form(m).rank;
    };
    for (int v = 0; v <= n; ++v) {
        if (!survives[v]) continue;
        if (d1_rank(v - 1) == 0) out.e2_direct.push_back({v, 0, -2 * h(v)});
        if (d1_rank(v) == 0) out.e2_direct.push_back({v, 1, 1 - 2 * h(v + 1)});
    }
    out.e2_routes_agree = out.e2_closed == out.e2_direct;

    std::multiset<std::pair<int, int>> exponents, mirrored;
    out.support_in_0_mu = true;
    for (const E2Term& e : out.e2_closed) {
        if (e.v < 0 || e.v > inv.mu) out.support_in_0_mu = false;
        exponents.insert({e.v + e.epsilon, e.epsilon});
        mirrored.insert({inv.mu - e.v - e.epsilon, e.epsilon});
        out.e2_euler.add({e.v + e.epsilon}, 0, e.epsilon ? -1 : 1);
    }
    out.symmetric = exponents == mirrored;

    // 0 -> E2_1(v) -> HL(v) -U-> HL(v+1) -> E2_0(v+1) -> 0
    out.exact_sequence = true;
    auto count = [&](int v, int eps) {
        return static_cast<std::size_t>(std::count_if(
            out.e2_closed.begin(), out.e2_closed.end(),
            [&](const E2Term& e) { return e.v == v && e.epsilon == eps; }));
    };
    for (int v = 0; v < n; ++v) {
        const std::size_t u_rank = out.u_action.count(v);
        if (hl_rank[v] - u_rank != count(v, 1) || hl_rank[v + 1] - u_rank != count(v + 1, 0))
            out.exact_sequence = false;
    }

    // S from HL^- and from E^2.
    bool from_hl = true, from_e2 = true;
    bool member = false;
    for (int v = 0; v <= n; ++v) {
        from_hl = from_hl && (direct_support.count(v) == 1) == in_s(v);
        member = count(v, 0) == 1 || (member && count(v - 1, 1) == 0);
        from_e2 = from_e2 && member == in_s(v);
    }
    out.recovers_semigroup = from_hl && from_e2;
    return out;
}

char to_char(R2Case c) { return static_cast<char>('a' + static_cast<int>(c)); }

R2Prediction r2_classify(const HilbertTable& t, const LatticePoint& v) {
    if (t.r() != 2) throw std::invalid_argument("two-branch classification needs r = 2");
    const int h = t(v);
    const int d1 = t({v[0] + 1, v[1]}) - h;
    const int d2 = t({v[0], v[1] + 1}) - h;
    const int d12 = t({v[0] + 1, v[1] + 1}) - h;
    if (d1 == 0 && d2 == 0 && d12 == 0) return {R2Case::A, {}};
    if (d1 == 0 && d2 == 1 && d12 == 1) return {R2Case::B, {}};
    if (d1 == 1 && d2 == 0 && d12 == 1) return {R2Case::C, {}};
    if (d1 == 1 && d2 == 1 && d12 == 1) return {R2Case::D, single_class(-2 * h)};
    if (d1 == 1 && d2 == 1 && d12 == 2) {
        GradedGroup g = single_class(-2 * h);
        g.set(-1 - 2 * h, HomologyGroup{1, {}});
        return {R2Case::E, g};
    }
    throw UnclassifiablePattern("steps (" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                                std::to_string(d12) + ") at " + to_string(v));
}

}  // namespace curvelat
