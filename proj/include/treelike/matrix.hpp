#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace treelike {

// Row-major n x n table.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), cells_(n * n, fill) {}

    std::size_t n() const { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }
    std::span<T> row(std::size_t r) { return {cells_.data() + r * n_, n_}; }
    std::span<const T> row(std::size_t r) const { return {cells_.data() + r * n_, n_}; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> cells_;
};

}  // namespace treelike
