#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbip/errors.hpp"

namespace qbip {

/// Dense row-major 2-D array with at least one row and one column.
template <typename T>
class Grid {
public:
    Grid(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols) {
        check_dims(rows, cols);
        data_.assign(rows * cols, fill);
    }

    Grid(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        check_dims(rows, cols);
        if (data_.size() != rows * cols) {
            throw ShapeError("grid data has " + std::to_string(data_.size()) +
                             " elements, expected " + std::to_string(rows * cols));
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const T> data() const noexcept { return data_; }
    std::span<T> data() noexcept { return data_; }

    bool same_shape(const Grid& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    static void check_dims(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) {
            throw ShapeError("grid dimensions must be at least 1x1");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

}  // namespace qbip
