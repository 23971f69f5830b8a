#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "stacky/rational.hpp"

namespace stacky {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& rhs) const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    // row a += c * row b
    void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
    void add_col_multiple(std::size_t a, std::size_t b, const Int& c);

    IntMatrix submatrix_rows(const std::vector<std::size_t>& row_idx) const;
    IntMatrix submatrix_cols(std::size_t first, std::size_t count) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

} // namespace stacky
