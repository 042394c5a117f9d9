#pragma once

// Independent reference computations. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "curvelat/curve.hpp"
#include "curvelat/rational.hpp"

namespace oracle {

using curvelat::BigInt;
using curvelat::Rational;

/// Textbook Gaussian elimination over Q with partial search for a nonzero pivot.
inline std::size_t rank_q(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline BigInt det(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = m[i][j];
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && q[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(q[p], q[c]);
            d = -d;
        }
        d *= q[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = q[r][c] / q[c][c];
            for (std::size_t k = c; k < n; ++k) q[r][k] -= f * q[c][k];
        }
    }
    return d.get_num();
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        out.push_back(idx);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
/// D_k the gcd of all k x k minors. Only for small matrices.
inline std::vector<BigInt> invariant_factors(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> out;
    BigInt previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combinations(rows, k, rs);
        combinations(cols, k, cs);
        BigInt g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
                BigInt d = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

/// Numerical semigroup generated by `gens`, as a membership vector on [0, limit].
inline std::vector<bool> numerical_semigroup(const std::vector<int>& gens, int limit) {
    std::vector<bool> in(limit + 1, false);
    in[0] = true;
    for (int s = 1; s <= limit; ++s)
        for (int g : gens)
            if (s >= g && in[s - g]) {
                in[s] = true;
                break;
            }
    return in;
}

/// For one branch: h(v) = #{s in S : s < v}.
inline int h_from_semigroup(const std::vector<bool>& in, int v) {
    int n = 0;
    for (int s = 0; s < v; ++s) n += in[s] ? 1 : 0;
    return n;
}

/// The piecewise closed form for the A_{2n-1} singularity.
inline int h_a2n1(int n, int v1, int v2) {
    return std::min(v1, v2) < n ? std::max(v1, v2) : v1 + v2 - n;
}

/// Rank table of the vectors `vecs` (columns of a matrix over Q).
inline std::vector<int> vector_matroid(const std::vector<std::vector<int>>& vecs) {
    const int n = static_cast<int>(vecs.size());
    std::vector<int> ranks(std::size_t{1} << n);
    for (std::uint32_t k = 0; k < ranks.size(); ++k) {
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < n; ++i)
            if ((k >> i) & 1u) {
                std::vector<Rational> row;
                for (int x : vecs[i]) row.emplace_back(x);
                rows.push_back(row);
            }
        ranks[k] = static_cast<int>(rank_q(rows));
    }
    return ranks;
}

inline long long binomial(int n, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace oracle
