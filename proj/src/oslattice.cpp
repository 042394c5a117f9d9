#include "curvelat/oslattice.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "curvelat/errors.hpp"

namespace curvelat {

void GradedGroup::set(int degree, HomologyGroup g) {
    if (g.is_zero()) {
        groups_.erase(degree);
    } else {
        groups_[degree] = std::move(g);
    }
}

HomologyGroup GradedGroup::at(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? HomologyGroup{} : it->second;
}

bool GradedGroup::has_torsion() const {
    return std::any_of(groups_.begin(), groups_.end(),
                       [](const auto& kv) { return !kv.second.torsion.empty(); });
}

LaurentPoly GradedGroup::poincare() const {
    LaurentPoly p;
    for (const auto& [d, g] : groups_) p.add_term(d, BigInt(static_cast<unsigned long>(g.free_rank)));
    return p;
}

std::string GradedGroup::to_string() const {
    if (groups_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto summand = [&](const std::string& body, int degree) {
        os << (first ? "" : " + ") << body << "[" << degree << "]";
        first = false;
    };
    for (auto it = groups_.rbegin(); it != groups_.rend(); ++it) {
        const auto& [d, g] = *it;
        if (g.free_rank == 1) summand("Z", d);
        if (g.free_rank > 1) summand("Z^" + std::to_string(g.free_rank), d);
        for (const BigInt& t : g.torsion) summand("Z/" + curvelat::to_string(t), d);
    }
    return os.str();
}

namespace {

struct MapData {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

MapData analyse(const SparseIntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    const SNFResult snf = smith_normal_form(m);
    MapData out{snf.rank, {}};
    for (const BigInt& d : snf.divisors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

HomologyGroup group_from(std::size_t dim, const MapData& out_of, const MapData& into) {
    HomologyGroup g;
    g.free_rank = dim - out_of.rank - into.rank;
    g.torsion = into.torsion;
    return g;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

bool is_zero_matrix(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

}  // namespace

GradedGroup chain_homology(const std::vector<std::size_t>& dims,
                           const std::vector<SparseIntMatrix>& boundaries) {
    const std::size_t top = dims.size();
    std::vector<MapData> maps(top + 1);
    for (std::size_t d = 1; d < top && d < boundaries.size(); ++d) maps[d] = analyse(boundaries[d]);
    GradedGroup out;
    for (std::size_t d = 0; d < top; ++d)
        out.set(static_cast<int>(d), group_from(dims[d], d ? maps[d] : MapData{}, maps[d + 1]));
    return out;
}

UComplex::UComplex(std::vector<Cell> cells, int shift) : cells_(std::move(cells)), shift_(shift) {
    for (const Cell& c : cells_)
        for (const Face& f : c.boundary) {
            if (f.cell >= cells_.size()) throw std::invalid_argument("face refers to a missing cell");
            if (f.u_power < 0) throw std::invalid_argument("negative U-power in a boundary");
        }
}

int UComplex::top_degree() const {
    int top = INT_MIN;
    for (const Cell& c : cells_) top = std::max(top, c.dim - 2 * c.weight + shift_);
    return top;
}

GradedGroup UComplex::homology_once(int u_truncation, int low, int high) const {
    // Generators U^j c of degree e, for e in [low - 1, high + 1].
    const int first = low - 1;
    const int count = high - low + 3;
    std::vector<std::map<std::pair<std::size_t, int>, std::size_t>> gens(count);
    for (int e = first; e < first + count; ++e) {
        auto& index = gens[e - first];
        for (std::size_t c = 0; c < cells_.size(); ++c) {
            const int twice_j = cells_[c].dim + shift_ - e - 2 * cells_[c].weight;
            if (twice_j < 0 || twice_j % 2 != 0 || twice_j / 2 > u_truncation) continue;
            const std::size_t next = index.size();
            index.emplace(std::make_pair(c, twice_j / 2), next);
        }
    }
    // maps[k] : degree first + k -> first + k - 1, for k >= 1.
    std::vector<MapData> maps(count);
    for (int k = 1; k < count; ++k) {
        const auto& source = gens[k];
        const auto& target = gens[k - 1];
        SparseIntMatrix m(target.size(), source.size());
        for (const auto& [gen, col] : source) {
            for (const Face& f : cells_[gen.first].boundary) {
                const int power = gen.second + f.u_power;
                if (power > u_truncation) continue;
                auto it = target.find({f.cell, power});
                if (it == target.end()) throw std::logic_error("face generator missing");
                m.add(it->second, col, f.sign);
            }
        }
        maps[k] = analyse(m);
    }
    GradedGroup out;
    for (int e = low; e <= high; ++e) {
        const int k = e - first;
        out.set(e, group_from(gens[k].size(), maps[k], maps[k + 1]));
    }
    return out;
}

GradedGroup UComplex::homology(int u_truncation) const {
    if (cells_.empty()) return {};
    const int top = top_degree();
    const int low = top + 1 - 2 * u_truncation;
    GradedGroup result = homology_once(u_truncation, low, top);
    const GradedGroup rerun = homology_once(u_truncation + 2, low - 4, top);
    for (const auto& [d, g] : rerun.groups()) {
        if (d < low) {
            throw ConsistencyError("homology in degree " + std::to_string(d) +
                                   " appears only with a larger U-truncation");
        }
        if (!(result.at(d) == g)) {
            throw ConsistencyError("homology in degree " + std::to_string(d) +
                                   " changes with the U-truncation");
        }
    }
    if (result.groups().size() != rerun.groups().size()) {
        throw ConsistencyError("homology changes with the U-truncation");
    }
    return result;
}

bool UComplex::squares_to_zero() const {
    for (const Cell& c : cells_) {
        std::map<std::pair<std::size_t, int>, BigInt> acc;
        for (const Face& f : c.boundary)
            for (const Face& g : cells_[f.cell].boundary)
                acc[{g.cell, f.u_power + g.u_power}] += f.sign * g.sign;
        for (const auto& [key, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

OSComplex::OSComplex(Matroid m) : m_(std::move(m)), basis_(subsets_by_size(m_.n())) {
    position_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) position_[basis_[i].bits()] = i;
}

IntMatrix OSComplex::build(int which) const {
    IntMatrix out(size(), size());
    for (std::size_t col = 0; col < size(); ++col) {
        const SubsetMask k = basis_[col];
        const auto elems = k.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const SubsetMask face = k.without(elems[i]);
            const bool same_rank = m_.rank(face) == m_.rank(k);
            if ((which == 0 && !same_rank) || (which == 1 && same_rank)) continue;
            out(position(face), col) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return out;
}

IntMatrix OSComplex::d() const { return build(-1); }
IntMatrix OSComplex::d0() const { return build(0); }
IntMatrix OSComplex::d1() const { return build(1); }

UComplex OSComplex::u_complex(int shift) const {
    std::vector<UComplex::Cell> cells;
    for (const SubsetMask k : basis_) {
        UComplex::Cell cell{k.size(), m_.rank(k), {}};
        const auto elems = k.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const SubsetMask face = k.without(elems[i]);
            cell.boundary.push_back(
                {position(face), (i % 2 == 0) ? 1 : -1, m_.rank(k) - m_.rank(face)});
        }
        cells.push_back(std::move(cell));
    }
    return UComplex(std::move(cells), shift);
}

LaurentPoly arrangement_poincare(const Matroid& m) {
    LaurentPoly p;
    for (SubsetMask k : subsets_by_size(m.n())) {
        const int rho = m.rank(k);
        const int sign = ((k.size() + rho) % 2 == 0) ? 1 : -1;
        p.add_term(rho, BigInt(sign));
    }
    return p;
}

LaurentPoly projective_poincare(const Matroid& m) {
    LaurentPoly q;
    const LaurentPoly one_plus_t = LaurentPoly::monomial(0) + LaurentPoly::monomial(1);
    if (!arrangement_poincare(m).divide_exact(one_plus_t, q)) {
        throw ConsistencyError("arrangement Poincaré polynomial is not divisible by 1 + t");
    }
    return q;
}

namespace {

// Homology of the sub-complex of (E, d0) on the basis elements accepted by
// `keep`, graded by |K|.
template <typename Keep>
GradedGroup graded_d0_homology(const OSComplex& os, Keep keep) {
    const int n = os.matroid().n();
    const IntMatrix d0 = os.d0();
    std::vector<std::vector<std::size_t>> by_degree(n + 1);
    std::vector<std::size_t> local(os.size());
    for (std::size_t i = 0; i < os.size(); ++i) {
        const SubsetMask k = os.basis()[i];
        if (!keep(k)) continue;
        local[i] = by_degree[k.size()].size();
        by_degree[k.size()].push_back(i);
    }
    std::vector<std::size_t> dims(n + 1);
    std::vector<SparseIntMatrix> maps;
    maps.emplace_back(0, 0);
    for (int d = 0; d <= n; ++d) dims[d] = by_degree[d].size();
    for (int d = 1; d <= n; ++d) {
        SparseIntMatrix m(dims[d - 1], dims[d]);
        for (std::size_t col : by_degree[d])
            for (std::size_t row : by_degree[d - 1])
                if (d0(row, col) != 0) m.add(local[row], local[col], d0(row, col));
        maps.push_back(std::move(m));
    }
    return chain_homology(dims, maps);
}

}  // namespace

GradedGroup os_homology(const Matroid& m) {
    return graded_d0_homology(OSComplex(m), [](SubsetMask) { return true; });
}

bool os_gradings_coincide(const Matroid& m) {
    const OSComplex os(m);
    for (int rho = 0; rho <= m.total_rank(); ++rho) {
        const GradedGroup g =
            graded_d0_homology(os, [&](SubsetMask k) { return m.rank(k) == rho; });
        for (const auto& [degree, group] : g.groups())
            if (degree != rho) return false;
    }
    return true;
}

GradedGroup du_homology(const Matroid& m, int u_truncation) {
    if (u_truncation < m.n() + 2) throw std::invalid_argument("U-truncation must be at least n + 2");
    return OSComplex(m).u_complex().homology(u_truncation);
}

bool os_differential_identities(const Matroid& m) {
    const OSComplex os(m);
    const IntMatrix a = os.d0();
    const IntMatrix b = os.d1();
    if (!is_zero_matrix(multiply(a, a)) || !is_zero_matrix(multiply(b, b))) return false;
    const IntMatrix ab = multiply(a, b);
    const IntMatrix ba = multiply(b, a);
    for (std::size_t i = 0; i < ab.rows(); ++i)
        for (std::size_t j = 0; j < ab.cols(); ++j)
            if (ab(i, j) + ba(i, j) != 0) return false;
    return os.u_complex().squares_to_zero();
}

namespace {

using Vec = std::vector<Rational>;

std::size_t span_rank(const std::vector<Vec>& rows, std::size_t width) {
    if (rows.empty()) return 0;
    RatMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
    return rank_rational(m);
}

Vec column(const IntMatrix& m, std::size_t j) {
    Vec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = Rational(m(i, j));
    return v;
}

Vec unit(std::size_t size, std::size_t i) {
    Vec v(size);
    v[i] = 1;
    return v;
}

// z_L ^ v for a vector v in the basis of OSComplex.
Vec wedge(const OSComplex& os, SubsetMask l, const Vec& v) {
    Vec out(os.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        const SubsetMask k = os.basis()[i];
        if (!(k & l).empty()) continue;
        int inversions = 0;
        for (int a : l.elements())
            for (int b : k.elements())
                if (a > b) ++inversions;
        const Rational s = (inversions % 2) ? v[i] * -1 : v[i];
        out[os.position(l | k)] += s;
    }
    return out;
}

}  // namespace

D0StructureReport d0_structure_checks(const Matroid& m) {
    if (m.n() > 8) throw std::invalid_argument("structure checks are limited to n <= 8");
    const OSComplex os(m);
    const std::size_t size = os.size();
    const IntMatrix full = os.d();
    const IntMatrix d0 = os.d0();
    const IntMatrix d1 = os.d1();
    D0StructureReport rep;

    std::vector<Vec> j_basis, jperp_basis, dj, image;
    for (std::size_t i = 0; i < size; ++i) {
        if (os.dependent(os.basis()[i])) {
            j_basis.push_back(unit(size, i));
            dj.push_back(column(full, i));
        } else {
            jperp_basis.push_back(unit(size, i));
        }
        image.push_back(column(d0, i));
    }

    // (a) The ideal generated by J and dJ equals J + dJ.
    std::vector<Vec> j_plus_dj = j_basis;
    j_plus_dj.insert(j_plus_dj.end(), dj.begin(), dj.end());
    std::vector<Vec> ideal = j_plus_dj;
    for (std::size_t i = 0; i < size; ++i)
        for (const Vec& g : dj) ideal.push_back(wedge(os, os.basis()[i], g));
    rep.ideal_equals_j_plus_dj = span_rank(ideal, size) == span_rank(j_plus_dj, size);

    // (b) and (c).
    rep.d0_kills_jperp = true;
    rep.d1_preserves_j = true;
    for (std::size_t col = 0; col < size; ++col) {
        const bool dep = os.dependent(os.basis()[col]);
        for (std::size_t row = 0; row < size; ++row) {
            if (!dep && d0(row, col) != 0) rep.d0_kills_jperp = false;
            if (dep && d1(row, col) != 0 && !os.dependent(os.basis()[row]))
                rep.d1_preserves_j = false;
        }
    }

    // (d) J^perp + Im d0 lies in Ker d0 (by (b) and d0^2 = 0) and has its dimension.
    const std::size_t rank_image = span_rank(image, size);
    std::vector<Vec> kernel_candidates = jperp_basis;
    kernel_candidates.insert(kernel_candidates.end(), image.begin(), image.end());
    rep.kernel_split = rep.d0_kills_jperp && is_zero_matrix(multiply(d0, d0)) &&
                       span_rank(kernel_candidates, size) == size - rank_image;

    // (e) dim(Im cap J) + dim(Im cap J^perp) == dim Im.
    auto intersection_dim = [&](const std::vector<Vec>& sub) {
        std::vector<Vec> both = image;
        both.insert(both.end(), sub.begin(), sub.end());
        return rank_image + sub.size() - span_rank(both, size);
    };
    rep.image_split = intersection_dim(j_basis) + intersection_dim(jperp_basis) == rank_image;
    return rep;
}

}  // namespace curvelat
