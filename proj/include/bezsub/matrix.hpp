#ifndef BEZSUB_MATRIX_HPP
#define BEZSUB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "bezsub/poly.hpp"
#include "bezsub/rational.hpp"

namespace bezsub {

/// Dense row-major matrix. Immutable in spirit: built once, then read.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            for (const auto& v : row) e_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

using RMatrix = Matrix<Rat>;
using PMatrix = Matrix<Poly>;

/// Largest x-degree appearing in the matrix (0 for an empty or all-constant
/// matrix); bounds the determinant degree as rows * max_xdeg.
int max_xdeg(const PMatrix& m);

/// Specialize every entry at x = a.
RMatrix eval_at(const PMatrix& m, const Rat& a);

/// Exact determinant by fraction-free (Bareiss) elimination: each row is
/// cleared to integers first (tracking the factor), then integer Bareiss
/// runs with exact divisions only.
Rat det_rat(const RMatrix& m);

/// Exact determinant of a polynomial matrix by evaluation-interpolation:
/// specialize x at enough small integer points, take det_rat at each, and
/// Lagrange-interpolate. degree_hint, when nonnegative, narrows the
/// rows*max_xdeg bound; callers own its correctness.
Poly det_poly(const PMatrix& m, int degree_hint = -1);

/// d0 x d0 matrix with entry (i, j) = points[j]^i (row index = power).
RMatrix vandermonde(const std::vector<Rat>& points);

/// prod_{i<j} (points[j] - points[i]); the closed form for det(vandermonde).
Rat det_vandermonde(const std::vector<Rat>& points);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// The xs must be pairwise distinct.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace bezsub

#endif
