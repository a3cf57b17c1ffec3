#pragma once

#include "cospec/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cospec {

// Dense row-major matrix over exact rationals. Indices are 0-based; the
// hypergraph layer maps vertex id v (1-based) to row/column v-1.
class Matrix {
  public:
    Matrix() = default;

    Matrix(int rows, int cols)
        : rows_(check_dim(rows)),
          cols_(check_dim(cols)),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix constant(int rows, int cols, const Rational& value) {
        Matrix m(rows, cols);
        for (auto& e : m.entries_) e = value;
        return m;
    }

    // image maps vertex ids: image[v-1] is where v goes. Column v-1 carries
    // the single 1 in row image[v-1]-1, so P * x permutes coordinates the
    // same way Hypergraph::permuted relabels vertices.
    static Matrix permutation(const std::vector<int>& image) {
        const int n = static_cast<int>(image.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : image) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("permutation: image is not a bijection on 1..n");
            }
            seen[static_cast<std::size_t>(v)] = 1;
        }
        Matrix m(n, n);
        for (int j = 0; j < n; ++j) m.at(image[static_cast<std::size_t>(j)] - 1, j) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return entries_[index(i, j)]; }
    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        }
        return t;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
        Rational t = 0;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool operator==(const Matrix&) const = default;

  private:
    static int check_dim(int d) {
        if (d < 0) throw std::invalid_argument("matrix: negative dimension");
        return d;
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
            throw std::out_of_range("matrix: index out of range");
        }
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

inline bool is_orthogonal(const Matrix& q) {
    if (q.rows() != q.cols()) return false;
    return q * q.transposed() == Matrix::identity(q.rows());
}

}  // namespace cospec
