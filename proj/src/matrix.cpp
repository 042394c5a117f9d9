#include "curvelat/matrix.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace curvelat {

void SparseIntMatrix::add(std::size_t i, std::size_t j, const BigInt& value) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("sparse matrix index");
    if (sgn(value) == 0) return;
    auto& row = data_[i];
    auto [it, inserted] = row.try_emplace(j, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0) row.erase(it);
    }
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s.add(i, j, m(i, j));
    return s;
}

std::size_t rank_integer(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    BigInt prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (sgn(a(i, col)) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
        }
        const BigInt p = a(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt f = a(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt v = p * a(i, j) - f * a(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, col) = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const RatMatrix& m) {
    // Row scaling by a nonzero constant preserves rank, so clear each row's
    // denominators and run the integer elimination.
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational scaled = m(i, j) * l;
            a(i, j) = scaled.get_num();
        }
    }
    return rank_integer(a);
}

namespace {

// Working state for the sparse Smith reduction. Rows and columns are kept
// in sync so both row and column operations stay cheap.
class SmithReducer {
public:
    explicit SmithReducer(const SparseIntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (const auto& [j, v] : m.row(i)) set(i, j, v);
    }

    SNFResult run() {
        std::vector<BigInt> diagonal;
        while (true) {
            auto pivot = choose_pivot();
            if (!pivot) break;
            auto [pi, pj] = *pivot;
            diagonal.push_back(abs(reduce_at(pi, pj)));
        }
        return normalize(std::move(diagonal));
    }

private:
    const BigInt& get(std::size_t i, std::size_t j) const { return rows_[i].at(j); }

    void set(std::size_t i, std::size_t j, const BigInt& v) {
        if (sgn(v) == 0) {
            rows_[i].erase(j);
            cols_[j].erase(i);
        } else {
            rows_[i][j] = v;
            cols_[j].insert(i);
        }
    }

    // Picks an entry of minimal absolute value; ties go to the sparsest
    // row/column pair to limit fill-in.
    std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs;
        std::size_t best_cost = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (const auto& [j, v] : rows_[i]) {
                BigInt a = abs(v);
                std::size_t cost = (rows_[i].size() - 1) * (cols_[j].size() - 1);
                if (!best || a < best_abs || (a == best_abs && cost < best_cost)) {
                    best = {i, j};
                    best_abs = a;
                    best_cost = cost;
                    if (a == 1 && cost == 0) return best;
                }
            }
        }
        return best;
    }

    // row_t -= f * row_s
    void row_op(std::size_t target, std::size_t source, const BigInt& f) {
        std::vector<std::pair<std::size_t, BigInt>> src(rows_[source].begin(), rows_[source].end());
        for (const auto& [j, v] : src) {
            auto it = rows_[target].find(j);
            BigInt nv = (it == rows_[target].end() ? BigInt(0) : it->second) - f * v;
            set(target, j, nv);
        }
    }

    // col_t -= f * col_s
    void col_op(std::size_t target, std::size_t source, const BigInt& f) {
        std::vector<std::size_t> src(cols_[source].begin(), cols_[source].end());
        for (std::size_t i : src) {
            const BigInt v = rows_[i].at(source);
            auto it = rows_[i].find(target);
            BigInt nv = (it == rows_[i].end() ? BigInt(0) : it->second) - f * v;
            set(i, target, nv);
        }
    }

    // Eliminates the row and column of the pivot, shrinking the pivot
    // whenever a remainder appears. Returns the final pivot value.
    BigInt reduce_at(std::size_t pi, std::size_t pj) {
        while (true) {
            bool changed = false;
            const BigInt p = get(pi, pj);
            std::vector<std::size_t> others(cols_[pj].begin(), cols_[pj].end());
            for (std::size_t i : others) {
                if (i == pi) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), get(i, pj).get_mpz_t(), p.get_mpz_t());
                row_op(i, pi, q);
                if (rows_[i].count(pj)) {
                    // Nonzero remainder, strictly smaller than |p|.
                    pi = i;
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            const BigInt p2 = get(pi, pj);
            std::vector<std::size_t> row_cols;
            for (const auto& [j, v] : rows_[pi]) if (j != pj) row_cols.push_back(j);
            for (std::size_t j : row_cols) {
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), get(pi, j).get_mpz_t(), p2.get_mpz_t());
                col_op(j, pj, q);
                if (rows_[pi].count(j)) {
                    pj = j;
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            BigInt value = get(pi, pj);
            set(pi, pj, 0);
            return value;
        }
    }

    static SNFResult normalize(std::vector<BigInt> d) {
        // Enforce the divisibility chain: (a, b) -> (gcd, lcm) preserves the
        // product and the module.
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                BigInt g, l;
                mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
                if (g == d[i]) continue;
                mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
                d[i] = g;
                d[j] = l;
            }
        }
        std::sort(d.begin(), d.end());
        SNFResult out;
        out.rank = d.size();
        out.divisors = std::move(d);
        return out;
    }

    std::vector<std::map<std::size_t, BigInt>> rows_;
    std::vector<std::set<std::size_t>> cols_;
};

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m) {
    SmithReducer reducer(m);
    return reducer.run();
}

SNFResult smith_normal_form(const IntMatrix& m) {
    return smith_normal_form(SparseIntMatrix::from_dense(m));
}

}  // namespace curvelat
