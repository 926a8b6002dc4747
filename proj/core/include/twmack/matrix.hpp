#pragma once

#include <optional>
#include <vector>

#include "twmack/finite_field.hpp"

namespace twmack {

/// Dense row-major matrix over a finite field; entries are field element indices.
struct Matrix {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::vector<int> a;

  Matrix() = default;
  Matrix(FieldPtr f, int r, int c) : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Matrix identity(FieldPtr f, int n);
  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix transpose() const;
  std::vector<int> apply(const std::vector<int>& v) const; // matrix * column vector
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct RrefResult {
  Matrix rref;
  int rank = 0;
  std::vector<int> pivot_cols;
  /// Echelon-normalized kernel basis vectors, each of length cols.
  std::vector<std::vector<int>> kernel;
  /// Only meaningful when a right-hand side was supplied.
  bool consistent = true;
  std::optional<Matrix> solution; // particular solution, cols(b) columns
};

/// Reduced row echelon data for A, and optionally a particular solution of
/// A x = b. An inconsistent system reports consistent = false instead of throwing.
RrefResult rref_solve(const Matrix& a, const Matrix* b = nullptr);

int matrix_rank(const Matrix& a);
Matrix matrix_inverse(const Matrix& a); // throws check_error when singular

/// Basis for the column span of a (echelon-picked columns of a itself).
std::vector<std::vector<int>> column_space_basis(const Matrix& a);

/// Solves U x = v for x where the columns of U are independent; throws when
/// v is outside the span.
std::vector<int> coordinates_in_basis(const Matrix& u, const std::vector<int>& v);

} // namespace twmack
