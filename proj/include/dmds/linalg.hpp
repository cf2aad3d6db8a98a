#pragma once

// Dense matrices over GF(q) and the exact elimination routines built on them.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dmds/gf.hpp"

namespace dmds {

class Matrix {
public:
    Matrix(FieldRef field, std::size_t rows, std::size_t cols);
    static Matrix identity(FieldRef field, std::size_t size);
    static Matrix from_rows(FieldRef field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);
    /// Convenience for prime-field literals; entries are reduced mod p.
    static Matrix from_ints(FieldRef field, const std::vector<std::vector<std::int64_t>>& rows);

    const FieldRef& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> values);
    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    bool is_zero() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    FieldRef field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

/// Reduced row echelon form by Gauss-Jordan with first-nonzero pivoting.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// The nonzero rows of rref(m).
Matrix row_basis(const Matrix& m);
/// Basis of {v : m v^T = 0}: one row per free column f with a 1 at f, zeros
/// on the other free columns.
Matrix kernel_basis(const Matrix& m);
/// Rank of the column submatrix; indices must be in range and distinct.
std::size_t columns_rank(const Matrix& m, std::span<const std::size_t> cols);
/// Throws SingularTransform when m is not invertible.
Matrix inverse(const Matrix& m);
/// Rows of `top` followed by rows of `bottom`.
Matrix stack(const Matrix& top, const Matrix& bottom);
bool same_row_space(const Matrix& a, const Matrix& b);
/// True when v lies in the row space of m.
bool in_row_space(const Matrix& m, std::span<const Elem> v);

/// Plain text grid, one row per line, entries in element text format.
std::string to_text(const Matrix& m);

}  // namespace dmds
