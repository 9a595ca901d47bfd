#include "smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <stdexcept>

#include "errors.hpp"

namespace curveclass::smith {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

namespace {

std::size_t ncols(const Matrix& a, std::size_t fallback) { return a.empty() ? fallback : a[0].size(); }

// row_i += k * row_j
void add_row(Matrix& m, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checked_add(m[i][c], checked_mul(k, m[j][c]));
}

void add_col(Matrix& m, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (auto& row : m) row[i] = checked_add(row[i], checked_mul(k, row[j]));
}

void swap_cols(Matrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

void negate_row(Matrix& m, std::size_t i) {
  for (auto& x : m[i]) x = checked_mul(x, -1);
}

}  // namespace

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size(), cols = ncols(b, 0);
  if (b.size() != inner) throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
  Matrix out(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return out;
}

Matrix transpose(const Matrix& a, std::size_t cols_if_empty) {
  const std::size_t cols = ncols(a, cols_if_empty);
  Matrix out(cols, std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

std::int64_t determinant(const Matrix& a) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  const cpp_int det = m[n - 1][n - 1] * sign;
  if (det > std::numeric_limits<std::int64_t>::max() || det < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("determinant overflow");
  return det.convert_to<std::int64_t>();
}

SmithForm smith_normal_form(const Matrix& a, std::size_t cols_if_empty) {
  const std::size_t rows = a.size(), cols = ncols(a, cols_if_empty);
  SmithForm s{identity(rows), a, identity(cols), {}};
  Matrix& D = s.D;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (pr == rows || std::llabs(D[i][j]) < std::llabs(D[pr][pc]))) pr = i, pc = j;
      if (pr == rows) break;
      std::swap(D[t], D[pr]);
      std::swap(s.U[t], s.U[pr]);
      swap_cols(D, t, pc);
      swap_cols(s.V, t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t k = D[i][t] / D[t][t];
        add_row(D, i, t, -k);
        add_row(s.U, i, t, -k);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t k = D[t][j] / D[t][t];
        add_col(D, j, t, -k);
        add_col(s.V, j, t, -k);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and go again
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(D, t, bad, 1);
      add_row(s.U, t, bad, 1);
    }
    if (D[t][t] == 0) break;
    if (D[t][t] < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
    s.diagonal.push_back(D[t][t]);
  }

  const Matrix check = multiply(multiply(s.U, a.empty() ? Matrix{} : a), s.V);
  if (rows > 0 && cols > 0 && check != D) throw Error(ErrorCode::Internal, "Smith form verification failed");
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && D[i][j] != 0) throw Error(ErrorCode::Internal, "Smith form is not diagonal");
  for (std::size_t i = 1; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] % s.diagonal[i - 1] != 0) throw Error(ErrorCode::Internal, "Smith form divisibility fails");
  if (std::llabs(determinant(s.U)) != 1 || std::llabs(determinant(s.V)) != 1)
    throw Error(ErrorCode::Internal, "Smith transforms are not unimodular");
  return s;
}

void RowLattice::insert(std::vector<std::int64_t> v) {
  if (v.size() != dim_) throw Error(ErrorCode::InvalidArgument, "vector has the wrong dimension");
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    auto& p = pivots_[c];
    if (p.empty()) {
      if (v[c] < 0)
        for (auto& x : v) x = checked_mul(x, -1);
      p = std::move(v);
      return;
    }
    // Euclid on column c between p and v
    while (v[c] != 0) {
      const std::int64_t k = p[c] / v[c];
      for (std::size_t j = c; j < dim_; ++j) p[j] = checked_add(p[j], checked_mul(-k, v[j]));
      std::swap(p, v);
    }
    if (p[c] < 0)
      for (auto& x : p) x = checked_mul(x, -1);
    // keep entries to the right of later pivots small
    for (std::size_t j = c + 1; j < dim_; ++j) {
      if (pivots_[j].empty() || p[j] == 0) continue;
      const std::int64_t k = p[j] / pivots_[j][j];
      for (std::size_t l = j; l < dim_; ++l) p[l] = checked_add(p[l], checked_mul(-k, pivots_[j][l]));
    }
  }
}

std::size_t RowLattice::rank() const noexcept {
  std::size_t r = 0;
  for (const auto& p : pivots_) r += !p.empty();
  return r;
}

Matrix RowLattice::basis() const {
  Matrix out;
  for (const auto& p : pivots_)
    if (!p.empty()) out.push_back(p);
  return out;
}

}  // namespace curveclass::smith
