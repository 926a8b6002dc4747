#include "twmack/matrix.hpp"

#include "twmack/errors.hpp"

namespace twmack {

Matrix Matrix::identity(FieldPtr f, int n) {
  Matrix m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols != o.rows) throw validation_error("matrix multiplication dimension mismatch");
  const auto& f = *field;
  Matrix out(field, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, o.at(k, j)));
    }
  return out;
}

Matrix Matrix::add(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw validation_error("matrix addition shape mismatch");
  Matrix out(field, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = field->add(a[i], o.a[i]);
  return out;
}

Matrix Matrix::sub(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw validation_error("matrix subtraction shape mismatch");
  Matrix out(field, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = field->sub(a[i], o.a[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      out.at(j, i) = at(i, j);
  return out;
}

std::vector<int> Matrix::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != cols) throw validation_error("matrix apply shape mismatch");
  const auto& f = *field;
  std::vector<int> out(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] = f.add(out[i], f.mul(at(i, j), v[j]));
  return out;
}

RrefResult rref_solve(const Matrix& a, const Matrix* b) {
  if (b && b->rows != a.rows) throw validation_error("right-hand side row count mismatch");
  const auto& f = *a.field;
  const int rows = a.rows, cols = a.cols;
  const int bcols = b ? b->cols : 0;

  // work on [A | b]
  Matrix w(a.field, rows, cols + bcols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) w.at(i, j) = a.at(i, j);
    for (int j = 0; j < bcols; ++j) w.at(i, cols + j) = b->at(i, j);
  }

  RrefResult res;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r)
      if (w.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(pivot_row, j));
    int inv = f.inv(w.at(pivot_row, col));
    for (int j = 0; j < w.cols; ++j) w.at(pivot_row, j) = f.mul(inv, w.at(pivot_row, j));
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      int factor = w.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < w.cols; ++j)
        w.at(r, j) = f.sub(w.at(r, j), f.mul(factor, w.at(pivot_row, j)));
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;

  res.rref = Matrix(a.field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      res.rref.at(i, j) = w.at(i, j);

  // kernel: one vector per free column
  std::vector<int> pivot_of_col(cols, -1);
  for (int i = 0; i < res.rank; ++i) pivot_of_col[res.pivot_cols[i]] = i;
  for (int col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<int> v(cols, 0);
    v[col] = 1;
    for (int i = 0; i < res.rank; ++i)
      v[res.pivot_cols[i]] = f.neg(res.rref.at(i, col));
    res.kernel.push_back(std::move(v));
  }

  if (b) {
    res.consistent = true;
    for (int r = res.rank; r < rows && res.consistent; ++r)
      for (int j = 0; j < bcols; ++j)
        if (w.at(r, cols + j) != 0) {
          res.consistent = false;
          break;
        }
    if (res.consistent) {
      Matrix sol(a.field, cols, bcols);
      for (int i = 0; i < res.rank; ++i)
        for (int j = 0; j < bcols; ++j)
          sol.at(res.pivot_cols[i], j) = w.at(i, cols + j);
      res.solution = std::move(sol);
    }
  }
  return res;
}

int matrix_rank(const Matrix& a) { return rref_solve(a).rank; }

Matrix matrix_inverse(const Matrix& a) {
  if (a.rows != a.cols) throw validation_error("only square matrices are invertible");
  Matrix id = Matrix::identity(a.field, a.rows);
  auto res = rref_solve(a, &id);
  if (res.rank != a.rows) throw check_error("matrix is singular");
  return *res.solution;
}

std::vector<std::vector<int>> column_space_basis(const Matrix& a) {
  auto res = rref_solve(a);
  std::vector<std::vector<int>> basis;
  basis.reserve(res.pivot_cols.size());
  for (int col : res.pivot_cols) {
    std::vector<int> v(a.rows);
    for (int i = 0; i < a.rows; ++i) v[i] = a.at(i, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> coordinates_in_basis(const Matrix& u, const std::vector<int>& v) {
  Matrix b(u.field, u.rows, 1);
  for (int i = 0; i < u.rows; ++i) b.at(i, 0) = v[i];
  auto res = rref_solve(u, &b);
  if (!res.consistent) throw check_error("vector is outside the span of the basis");
  std::vector<int> coords(u.cols);
  for (int i = 0; i < u.cols; ++i) coords[i] = res.solution->at(i, 0);
  return coords;
}

} // namespace twmack
