#include "dmds/linalg.hpp"

#include <algorithm>

namespace dmds {

Matrix::Matrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix Matrix::identity(FieldRef field, std::size_t size) {
    Matrix out(std::move(field), size, size);
    for (std::size_t i = 0; i < size; ++i) out(i, i) = Elem{1};
    return out;
}

Matrix Matrix::from_rows(FieldRef field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    Matrix out(std::move(field), 0, cols);
    for (const auto& r : rows) out.append_row(r);
    return out;
}

Matrix Matrix::from_ints(FieldRef field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(Errc::LengthMismatch, "ragged matrix literal");
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = field->from_int(rows[r][c]);
    }
    return out;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (values.size() != cols_) {
        throw Error(Errc::LengthMismatch,
                    "row of length " + std::to_string(values.size()) + " for " + std::to_string(cols_) + " columns");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    std::vector<bool> seen(cols_, false);
    for (const std::size_t c : cols) {
        if (c >= cols_) {
            throw Error(Errc::IndexOutOfRange,
                        "column " + std::to_string(c) + " out of range for " + std::to_string(cols_) + " columns");
        }
        if (seen[c]) throw Error(Errc::DuplicateIndex, "column " + std::to_string(c) + " selected twice");
        seen[c] = true;
    }
    Matrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    }
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.code == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.cols() != b.rows()) throw Error(Errc::LengthMismatch, "matrix product shape mismatch");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem aik = a(i, k);
            if (aik.code == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(*a.field(), *b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::LengthMismatch, "matrix sum shape mismatch");
    const Field& f = *a.field();
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
    }
    return out;
}

RowEchelon rref(const Matrix& m) {
    const Field& f = *m.field();
    RowEchelon out{m, 0, {}};
    Matrix& a = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a(pivot, col).code == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead) {
            auto r1 = a.row(pivot);
            auto r2 = a.row(lead);
            std::swap_ranges(r1.begin(), r1.end(), r2.begin());
        }
        const Elem scale = f.inv(a(lead, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) = f.mul(a(lead, c), scale);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead) continue;
            const Elem factor = a(r, col);
            if (factor.code == 0) continue;
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(lead, c)));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) {
    const RowEchelon e = rref(m);
    Matrix out(m.field(), 0, m.cols());
    for (std::size_t r = 0; r < e.rank; ++r) out.append_row(e.reduced.row(r));
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    const Field& f = *m.field();
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const std::size_t c : e.pivots) is_pivot[c] = true;
    Matrix out(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), Elem{0});
        v[free] = Elem{1};
        for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        out.append_row(v);
    }
    return out;
}

std::size_t columns_rank(const Matrix& m, std::span<const std::size_t> cols) {
    return rank(m.select_columns(cols));
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::SingularTransform, "non-square matrix has no inverse");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Elem{1};
    }
    const RowEchelon e = rref(aug);
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw Error(Errc::SingularTransform, "matrix is singular");
    }
    Matrix out(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
    }
    return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    require_same_field(*top.field(), *bottom.field());
    if (top.cols() != bottom.cols()) throw Error(Errc::LengthMismatch, "stacked matrices differ in width");
    Matrix out = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
    return out;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    const std::size_t ra = rank(a);
    return ra == rank(b) && rank(stack(a, b)) == ra;
}

bool in_row_space(const Matrix& m, std::span<const Elem> v) {
    Matrix extended = m;
    extended.append_row(v);
    return rank(extended) == rank(m);
}

std::string to_text(const Matrix& m) {
    const Field& f = *m.field();
    std::vector<std::string> cells(m.rows() * m.cols());
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r * m.cols() + c] = f.format(m(r, c));
            width = std::max(width, cells[r * m.cols() + c].size());
        }
    }
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string& s = cells[r * m.cols() + c];
            if (c) out += ' ';
            out += std::string(width - s.size(), ' ') + s;
        }
        out += '\n';
    }
    return out;
}

}  // namespace dmds
