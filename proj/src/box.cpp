#include "curvelat/box.hpp"

#include <stdexcept>

namespace curvelat {

BoxIndex::BoxIndex(LatticePoint corner) : corner_(std::move(corner)), strides_(corner_.size()) {
    size_ = 1;
    for (int i = dim() - 1; i >= 0; --i) {
        if (corner_[i] < 0) throw std::invalid_argument("box corner must be non-negative");
        strides_[i] = size_;
        size_ *= static_cast<std::size_t>(corner_[i]) + 1;
    }
}

bool BoxIndex::contains(const LatticePoint& v) const {
    if (v.size() != corner_.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || v[i] > corner_[i]) return false;
    return true;
}

std::size_t BoxIndex::index(const LatticePoint& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx += static_cast<std::size_t>(v[i]) * strides_[i];
    return idx;
}

LatticePoint BoxIndex::point(std::size_t index) const {
    LatticePoint v(corner_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return v;
}

std::vector<LatticePoint> BoxIndex::points() const {
    std::vector<LatticePoint> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(point(i));
    return out;
}

std::vector<LatticePoint> BoxIndex::points_column_major() const {
    std::vector<LatticePoint> out;
    out.reserve(size_);
    LatticePoint v(corner_.size(), 0);
    for (std::size_t n = 0; n < size_; ++n) {
        out.push_back(v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < corner_[i]) {
                ++v[i];
                break;
            }
            v[i] = 0;
        }
    }
    return out;
}

LatticePoint offset(const LatticePoint& v, int delta) {
    LatticePoint out = v;
    for (int& x : out) x += delta;
    return out;
}

}  // namespace curvelat
