#pragma once

#include <cstddef>
#include <vector>

#include "curvelat/curve.hpp"

namespace curvelat {

/// Dense indexing of the lattice box [0, corner] (inclusive). The last
/// coordinate varies fastest in index order.
class BoxIndex {
public:
    BoxIndex() = default;
    explicit BoxIndex(LatticePoint corner);

    const LatticePoint& corner() const noexcept { return corner_; }
    int dim() const noexcept { return static_cast<int>(corner_.size()); }
    std::size_t size() const noexcept { return size_; }

    bool contains(const LatticePoint& v) const;
    std::size_t index(const LatticePoint& v) const;  // requires contains(v)
    LatticePoint point(std::size_t index) const;

    /// All points in index order.
    std::vector<LatticePoint> points() const;

    /// All points with the first coordinate varying fastest.
    std::vector<LatticePoint> points_column_major() const;

private:
    LatticePoint corner_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

/// Box corner shifted by a constant in every coordinate.
LatticePoint offset(const LatticePoint& v, int delta);

}  // namespace curvelat
