#pragma once

#include <cstddef>
#include <vector>

#include "deformata/errors.hpp"
#include "deformata/exactalg/ratfn.hpp"

namespace deformata::exactalg {

// Dense row-major matrix; instantiated with Scalar and RatFn entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix data does not match its dimensions");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InputError("row length does not match matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using RatFnMatrix = Matrix<RatFn>;
using ScalarVector = std::vector<Scalar>;

// Kernel basis of m (vectors v with m*v = 0), one vector per free column of the
// fraction-free echelon form, normalized with a 1 in that column.
std::vector<ScalarVector> nullspace_scalar(const ScalarMatrix& m);
std::size_t rank_scalar(const ScalarMatrix& m);
Scalar determinant(const ScalarMatrix& m);

// Rank over the function field, via Bareiss elimination on the row-wise
// denominator-cleared polynomial matrix.
std::size_t rank_function_field(const RatFnMatrix& m);
RatFn determinant(const RatFnMatrix& m);

// Solves x * a = b for the row vector x, a square and invertible (Gauss-Jordan over Q(x)).
std::vector<RatFn> solve_left(const RatFnMatrix& a, const std::vector<RatFn>& b);

RatFnMatrix multiply(const RatFnMatrix& a, const RatFnMatrix& b);

// Reduced row echelon basis of the row space (nonzero rows only).
std::vector<ScalarVector> row_basis(const std::vector<ScalarVector>& rows, std::size_t width);

}  // namespace deformata::exactalg
