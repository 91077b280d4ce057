#pragma once
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace topoedge {

// Dense row-major matrix of doubles. rows == 0 means "absent" for optional
// feature matrices.
struct Matrix {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int64_t r, int64_t c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

  bool empty() const { return rows == 0; }

  double* row(int64_t i) { return data.data() + i * cols; }
  const double* row(int64_t i) const { return data.data() + i * cols; }

  std::span<double> row_span(int64_t i) { return {row(i), static_cast<size_t>(cols)}; }
  std::span<const double> row_span(int64_t i) const {
    return {row(i), static_cast<size_t>(cols)};
  }

  double& at(int64_t i, int64_t j) { return data[i * cols + j]; }
  double at(int64_t i, int64_t j) const { return data[i * cols + j]; }

  void fill(double v) { std::fill(data.begin(), data.end(), v); }

  static Matrix zeros_like(const Matrix& o) { return Matrix(o.rows, o.cols); }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

// c = a (r×k) · b (k×c). Fixed i,k,j loop order so the reduction order is
// deterministic.
Matrix matmul(const Matrix& a, const Matrix& b);

// c = aᵀ · b, with a (k×r), b (k×c).
Matrix matmul_tn(const Matrix& a, const Matrix& b);

// c = a · bᵀ, with a (r×k), b (c×k).
Matrix matmul_nt(const Matrix& a, const Matrix& b);

// y += alpha * x (elementwise, shapes must match).
void axpy(double alpha, const Matrix& x, Matrix& y);

bool all_finite(const Matrix& m);

}  // namespace topoedge
