#pragma once

#include <hyperpath/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hyperpath {

/// Dense row-major matrix of exact scalars. Empty shapes (0 rows or 0
/// columns) are valid and show up constantly as boundary matrices of
/// trivial dimensions.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    DenseMatrix(std::initializer_list<std::initializer_list<long>> grid) {
        rows_ = grid.size();
        cols_ = rows_ ? grid.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : grid) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            for (long x : row) entries_.emplace_back(x);
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Scalar>& entries() const { return entries_; }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Scalar> column(std::size_t c) const {
        std::vector<Scalar> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
        return v;
    }

    void set_column(std::size_t c, const std::vector<Scalar>& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
    }

    // Stacks `top` over `bottom`; column counts must agree.
    static DenseMatrix vstack(const DenseMatrix& top, const DenseMatrix& bottom) {
        if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
            throw std::invalid_argument("vstack: column mismatch");
        std::size_t cols = top.rows() ? top.cols() : bottom.cols();
        DenseMatrix m(top.rows() + bottom.rows(), cols);
        for (std::size_t i = 0; i < top.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = top.at(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
        return m;
    }

    static DenseMatrix hstack(const DenseMatrix& left, const DenseMatrix& right) {
        if (left.rows() != right.rows())
            throw std::invalid_argument("hstack: row mismatch");
        DenseMatrix m(left.rows(), left.cols() + right.cols());
        for (std::size_t i = 0; i < left.rows(); ++i) {
            for (std::size_t j = 0; j < left.cols(); ++j) m.at(i, j) = left.at(i, j);
            for (std::size_t j = 0; j < right.cols(); ++j) m.at(i, left.cols() + j) = right.at(i, j);
        }
        return m;
    }

    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const Field& f = Field()) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj == 0) continue;
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
            }
        }
    return c;
}

inline std::vector<Scalar> multiply(const DenseMatrix& a, const std::vector<Scalar>& x,
                                    const Field& f = Field()) {
    if (a.cols() != x.size()) throw std::invalid_argument("multiply: shape mismatch");
    std::vector<Scalar> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && x[j] != 0) y[i] = f.add(y[i], f.mul(a.at(i, j), x[j]));
    return y;
}

} // namespace hyperpath
