#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace curveclass::smith {

using Matrix = std::vector<std::vector<std::int64_t>>;  // row-major

/// Checked int64 arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a, std::size_t cols_if_empty = 0);
/// Exact determinant (Bareiss, arbitrary precision intermediate values).
std::int64_t determinant(const Matrix& a);

/// U A V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i > 0.
struct SmithForm {
  Matrix U, D, V;
  std::vector<std::int64_t> diagonal;  // the nonzero diagonal entries
  std::size_t rank() const noexcept { return diagonal.size(); }
};

/// Computes the form and re-verifies U A V = D and |det U| = |det V| = 1.
SmithForm smith_normal_form(const Matrix& a, std::size_t cols_if_empty = 0);

/// Integer row echelon basis for the row lattice spanned by the inserted vectors.
class RowLattice {
 public:
  explicit RowLattice(std::size_t dim) : dim_(dim), pivots_(dim) {}
  void insert(std::vector<std::int64_t> v);
  std::size_t rank() const noexcept;
  /// Basis vectors, one per pivot column.
  Matrix basis() const;

 private:
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> pivots_;  // empty when no pivot in that column
};

}  // namespace curveclass::smith
