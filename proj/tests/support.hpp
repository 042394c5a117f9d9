#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvelat/report.hpp"

#ifndef CURVELAT_DATA_DIR
#error "CURVELAT_DATA_DIR must point at data/curves"
#endif

namespace support {

using namespace curvelat;

inline constexpr int kTruncation = 32;

inline Branch branch(const std::string& x, const std::string& y, int truncation = kTruncation) {
    return Branch(parse_poly(x, truncation), parse_poly(y, truncation));
}

inline Curve curve(const std::vector<std::pair<std::string, std::string>>& branches,
                   int truncation = kTruncation) {
    std::vector<Branch> out;
    for (const auto& [x, y] : branches) out.push_back(branch(x, y, truncation));
    return Curve(std::move(out));
}

/// A_{2n-1}: two smooth branches y = +-x^n.
inline Curve a_odd(int n) {
    const std::string m = n == 1 ? "t" : "t^" + std::to_string(n);
    return curve({{"t", m}, {"t", "-1*" + m}});
}

inline Curve d5() { return curve({{"t", "0"}, {"t^3", "t^2"}}); }

inline const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = {"line", "cusp", "a4", "a3",
                                                   "a5",   "a7",   "d5", "triple_point"};
    return names;
}

inline std::string corpus_path(const std::string& name) {
    return std::string(CURVELAT_DATA_DIR) + "/" + name + ".json";
}

inline Curve corpus(const std::string& name) { return load_curve(corpus_path(name)); }

/// The printed D5 table, rows v2 = 0..5, columns v1 = 0..5.
inline int d5_figure(int v1, int v2) {
    static const int rows[6][6] = {{0, 1, 2, 3, 4, 5}, {1, 1, 2, 3, 4, 5}, {1, 1, 2, 3, 4, 5},
                                   {2, 2, 3, 4, 5, 6}, {3, 3, 3, 4, 5, 6}, {4, 4, 4, 5, 6, 7}};
    return rows[v2][v1];
}

}  // namespace support
