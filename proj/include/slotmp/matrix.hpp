#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slotmp {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Dense row-major matrix of doubles. Everything in the toolkit runs at
// 64-bit precision; the gradient-check and convergence tolerances rely on it.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {
    require(r >= 0 && c >= 0, "Matrix: negative dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> init) {
    const int r = static_cast<int>(init.size());
    const int c = r > 0 ? static_cast<int>(init.begin()->size()) : 0;
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : init) {
      require(static_cast<int>(row.size()) == c, "Matrix::from_rows: ragged rows");
      int j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  bool empty() const { return rows == 0 || cols == 0; }
  int64_t size() const { return static_cast<int64_t>(rows) * cols; }

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  std::string shape_str() const {
    return "[" + std::to_string(rows) + "x" + std::to_string(cols) + "]";
  }
};

inline bool all_finite(const Matrix& m) {
  for (double v : m.data)
    if (!std::isfinite(v)) return false;
  return true;
}

inline double max_abs(const Matrix& m) {
  double r = 0.0;
  for (double v : m.data) r = std::max(r, std::abs(v));
  return r;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  require(a.same_shape(b), "max_abs_diff: shape mismatch " + a.shape_str() + " vs " + b.shape_str());
  double r = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) r = std::max(r, std::abs(a.data[i] - b.data[i]));
  return r;
}

inline void add_into(Matrix& acc, const Matrix& m) {
  require(acc.same_shape(m), "add_into: shape mismatch " + acc.shape_str() + " vs " + m.shape_str());
  for (size_t i = 0; i < m.data.size(); ++i) acc.data[i] += m.data[i];
}

// C = op(A) * op(B), where op optionally transposes.
inline Matrix matmul_values(const Matrix& a, const Matrix& b, bool trans_a = false, bool trans_b = false) {
  const int m = trans_a ? a.cols : a.rows;
  const int k = trans_a ? a.rows : a.cols;
  const int kb = trans_b ? b.cols : b.rows;
  const int n = trans_b ? b.rows : b.cols;
  require(k == kb, "matmul: inner dimensions mismatch " + a.shape_str() + (trans_a ? "^T" : "") +
                       " * " + b.shape_str() + (trans_b ? "^T" : ""));
  Matrix out(m, n);
  if (!trans_a && !trans_b) {
    for (int i = 0; i < m; ++i) {
      const double* ar = a.row(i);
      double* orow = out.row(i);
      for (int p = 0; p < k; ++p) {
        const double av = ar[p];
        if (av == 0.0) continue;
        const double* br = b.row(p);
        for (int j = 0; j < n; ++j) orow[j] += av * br[j];
      }
    }
  } else if (!trans_a && trans_b) {
    for (int i = 0; i < m; ++i) {
      const double* ar = a.row(i);
      double* orow = out.row(i);
      for (int j = 0; j < n; ++j) {
        const double* br = b.row(j);
        double s = 0.0;
        for (int p = 0; p < k; ++p) s += ar[p] * br[p];
        orow[j] = s;
      }
    }
  } else if (trans_a && !trans_b) {
    for (int p = 0; p < k; ++p) {
      const double* ar = a.row(p);
      const double* br = b.row(p);
      for (int i = 0; i < m; ++i) {
        const double av = ar[i];
        if (av == 0.0) continue;
        double* orow = out.row(i);
        for (int j = 0; j < n; ++j) orow[j] += av * br[j];
      }
    }
  } else {
    for (int i = 0; i < m; ++i) {
      double* orow = out.row(i);
      for (int p = 0; p < k; ++p) {
        const double av = a(p, i);
        if (av == 0.0) continue;
        for (int j = 0; j < n; ++j) orow[j] += av * b(j, p);
      }
    }
  }
  return out;
}

}  // namespace slotmp
