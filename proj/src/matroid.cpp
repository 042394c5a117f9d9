#include "curvelat/matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "curvelat/errors.hpp"

namespace curvelat {

std::vector<SubsetMask> subsets_by_size(int n) {
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) out.emplace_back(b);
    std::stable_sort(out.begin(), out.end(),
                     [](SubsetMask a, SubsetMask b) { return a.size() < b.size(); });
    return out;
}

std::string Matroid::axiom_violation(int n, const std::vector<int>& ranks) {
    const std::uint32_t count = std::uint32_t{1} << n;
    if (ranks.size() != count) return "rank table has the wrong size";
    for (std::uint32_t k = 0; k < count; ++k) {
        const SubsetMask K(k);
        if (ranks[k] < 0 || ranks[k] > K.size())
            return "rank of subset " + std::to_string(k) + " outside [0, |K|]";
    }
    for (std::uint32_t a = 0; a < count; ++a) {
        for (std::uint32_t b = 0; b < count; ++b) {
            if ((a & b) == a && ranks[a] > ranks[b])
                return "rank not monotone on " + std::to_string(a) + " < " + std::to_string(b);
            if (ranks[a & b] + ranks[a | b] > ranks[a] + ranks[b])
                return "rank not submodular on " + std::to_string(a) + ", " + std::to_string(b);
        }
    }
    return {};
}

Matroid::Matroid(int n, std::vector<int> ranks) : n_(n), ranks_(std::move(ranks)) {
    if (n < 0 || n > 16) throw std::invalid_argument("matroid ground set size out of range");
    if (auto why = axiom_violation(n_, ranks_); !why.empty()) {
        throw ConsistencyError("not a rank function: " + why);
    }
}

Matroid Matroid::boolean(int n) { return uniform(n, n); }

Matroid Matroid::uniform(int n, int k) {
    std::vector<int> ranks(std::size_t{1} << n);
    for (std::uint32_t b = 0; b < ranks.size(); ++b) ranks[b] = std::min(SubsetMask(b).size(), k);
    return Matroid(n, std::move(ranks));
}

LaurentPoly characteristic_polynomial(const Matroid& m) {
    LaurentPoly chi;
    const int top = m.total_rank();
    for (SubsetMask k : subsets_by_size(m.n()))
        chi.add_term(top - m.rank(k), k.size() % 2 ? BigInt(-1) : BigInt(1));
    return chi;
}

}  // namespace curvelat
