#include "twmack/module.hpp"

#include "twmack/errors.hpp"

namespace twmack {

Matrix AlgebraModule::act(const std::vector<int>& coords) const {
  const auto& f = *algebra->field;
  Matrix out(algebra->field, dim, dim);
  for (int i = 0; i < algebra->dim; ++i) {
    if (coords[i] == 0) continue;
    for (size_t t = 0; t < out.a.size(); ++t)
      out.a[t] = f.add(out.a[t], f.mul(coords[i], action[i].a[t]));
  }
  return out;
}

AlgebraModule make_module(AlgebraPtr algebra, std::vector<Matrix> action) {
  if (static_cast<int>(action.size()) != algebra->dim)
    throw validation_error("module needs one action matrix per algebra basis element");
  AlgebraModule m;
  m.dim = action.empty() ? 0 : action[0].rows;
  for (const auto& mat : action)
    if (mat.rows != m.dim || mat.cols != m.dim)
      throw validation_error("module action matrices must be square of equal size");
  m.algebra = std::move(algebra);
  m.action = std::move(action);

  const auto& a = *m.algebra;
  // rho(b_i) rho(b_j) = sum_k c_ij^k rho(b_k), rho(1) = I
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Matrix lhs = m.action[i].mul(m.action[j]);
      Matrix rhs(a.field, m.dim, m.dim);
      for (int k = 0; k < a.dim; ++k) {
        int c = a.c(i, j, k);
        if (c == 0) continue;
        const auto& f = *a.field;
        for (size_t t = 0; t < rhs.a.size(); ++t)
          rhs.a[t] = f.add(rhs.a[t], f.mul(c, m.action[k].a[t]));
      }
      if (!(lhs == rhs))
        throw check_error("module action violates the structure constants at (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  if (!(m.act(a.unit) == Matrix::identity(a.field, m.dim)))
    throw check_error("module action of 1 is not the identity");
  return m;
}

AlgebraModule regular_module(const AlgebraPtr& algebra) {
  std::vector<Matrix> action;
  action.reserve(algebra->dim);
  for (int i = 0; i < algebra->dim; ++i) {
    std::vector<int> e(algebra->dim, 0);
    e[i] = 1;
    action.push_back(algebra->left_mult(e));
  }
  return make_module(algebra, std::move(action));
}

AlgebraModule zero_module(const AlgebraPtr& algebra) {
  std::vector<Matrix> action(algebra->dim, Matrix(algebra->field, 0, 0));
  return make_module(algebra, std::move(action));
}

AlgebraModule direct_sum(const AlgebraModule& m, const AlgebraModule& n) {
  if (m.algebra.get() != n.algebra.get())
    throw validation_error("direct sum requires modules over one algebra");
  std::vector<Matrix> action;
  action.reserve(m.algebra->dim);
  for (int i = 0; i < m.algebra->dim; ++i) {
    Matrix blk(m.algebra->field, m.dim + n.dim, m.dim + n.dim);
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c) blk.at(r, c) = m.action[i].at(r, c);
    for (int r = 0; r < n.dim; ++r)
      for (int c = 0; c < n.dim; ++c) blk.at(m.dim + r, m.dim + c) = n.action[i].at(r, c);
    action.push_back(std::move(blk));
  }
  return make_module(m.algebra, std::move(action));
}

AlgebraModule restrict_scalars(const AlgebraHom& f, const AlgebraModule& m) {
  if (f.dst.get() != m.algebra.get())
    throw validation_error("restrict_scalars: module is not over the hom target");
  std::vector<Matrix> action;
  action.reserve(f.src->dim);
  for (int i = 0; i < f.src->dim; ++i) {
    std::vector<int> e(f.src->dim, 0);
    e[i] = 1;
    action.push_back(m.act(f.apply(e)));
  }
  return make_module(f.src, std::move(action));
}

AlgebraModule extend_scalars(const AlgebraHom& f, const std::vector<std::vector<int>>& right_basis,
                             const AlgebraModule& m) {
  if (f.src.get() != m.algebra.get())
    throw validation_error("extend_scalars: module is not over the hom source");
  const auto& A = *f.src;
  const auto& B = *f.dst;
  const auto& field = *B.field;
  const int rank = static_cast<int>(right_basis.size());
  if (rank == 0) throw validation_error("extension requires a nonempty right basis");

  // E: A^rank -> B, (a_j) -> sum z_j f(a_j); must be a linear isomorphism
  Matrix e_map(B.field, B.dim, rank * A.dim);
  for (int j = 0; j < rank; ++j)
    for (int t = 0; t < A.dim; ++t) {
      std::vector<int> unit_t(A.dim, 0);
      unit_t[t] = 1;
      auto img = B.mul(right_basis[j], f.apply(unit_t));
      for (int i = 0; i < B.dim; ++i) e_map.at(i, j * A.dim + t) = img[i];
    }
  if (B.dim != rank * A.dim || matrix_rank(e_map) != B.dim)
    throw unsupported_error("right basis does not exhibit the target as a free module");
  Matrix e_inv = matrix_inverse(e_map);

  // action of b on (+)_j M: block (j', j) = rho_M(a_{j'}) where b z_j = sum z_{j'} f(a_{j'})
  std::vector<Matrix> action;
  action.reserve(B.dim);
  const int out_dim = rank * m.dim;
  for (int bi = 0; bi < B.dim; ++bi) {
    std::vector<int> eb(B.dim, 0);
    eb[bi] = 1;
    Matrix big(B.field, out_dim, out_dim);
    for (int j = 0; j < rank; ++j) {
      auto prod = B.mul(eb, right_basis[j]);
      auto coords = e_inv.apply(prod); // rank * A.dim coordinates
      for (int jp = 0; jp < rank; ++jp) {
        std::vector<int> a_coord(coords.begin() + jp * A.dim, coords.begin() + (jp + 1) * A.dim);
        Matrix blk = m.act(a_coord);
        for (int r = 0; r < m.dim; ++r)
          for (int c = 0; c < m.dim; ++c)
            big.at(jp * m.dim + r, j * m.dim + c) =
                field.add(big.at(jp * m.dim + r, j * m.dim + c), blk.at(r, c));
      }
    }
    action.push_back(std::move(big));
  }
  return make_module(f.dst, std::move(action));
}

AlgebraModule left_ideal_module(const AlgebraPtr& algebra, const std::vector<int>& idempotent) {
  const auto& a = *algebra;
  // basis of A e = column space of right multiplication by e
  Matrix re = a.right_mult(idempotent);
  auto basis = column_space_basis(re);
  const int dim = static_cast<int>(basis.size());
  Matrix u(a.field, a.dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < a.dim; ++i) u.at(i, j) = basis[j][i];

  std::vector<Matrix> action;
  action.reserve(a.dim);
  for (int bi = 0; bi < a.dim; ++bi) {
    std::vector<int> eb(a.dim, 0);
    eb[bi] = 1;
    Matrix mat(a.field, dim, dim);
    for (int j = 0; j < dim; ++j) {
      auto img = a.mul(eb, basis[j]);
      auto coords = coordinates_in_basis(u, img);
      for (int i = 0; i < dim; ++i) mat.at(i, j) = coords[i];
    }
    action.push_back(std::move(mat));
  }
  return make_module(algebra, std::move(action));
}

std::vector<long long> k0_multiplicities(const AlgebraModule& m, const AlgebraK0& k0) {
  if (m.algebra.get() != k0.algebra.get())
    throw validation_error("k0_multiplicities: module is not over the k0 algebra");
  std::vector<long long> out(k0.rank(), 0);
  for (int c = 0; c < k0.rank(); ++c) {
    int image_dim = m.dim == 0 ? 0 : matrix_rank(m.act(k0.idempotents[c]));
    int simple = k0.blocks[c].simple_dim;
    if (image_dim % simple != 0)
      throw check_error("module block dimension is not a multiple of the simple dimension "
                        "(semisimplicity tripwire)");
    out[c] = image_dim / simple;
  }
  return out;
}

K0Class k0_class(const AlgebraModule& m) {
  auto k0 = algebra_k0(m.algebra);
  return K0Class{k0_multiplicities(m, k0)};
}

IntMat k0_induced_map(const AlgebraHom& f, ScalarKind kind, const AlgebraK0& src_k0,
                      const AlgebraK0& dst_k0, const std::vector<std::vector<int>>* right_basis) {
  if (src_k0.algebra.get() != f.src.get() || dst_k0.algebra.get() != f.dst.get())
    throw validation_error("k0_induced_map: k0 data does not match the hom");
  const bool extend = kind == ScalarKind::Extend;
  if (extend && !right_basis)
    throw validation_error("extension K0 map needs the right basis of the target");
  // K0 map goes A -> B for extension, B -> A for restriction
  const AlgebraK0& from = extend ? src_k0 : dst_k0;
  const AlgebraK0& to = extend ? dst_k0 : src_k0;
  IntMat out(to.rank(), from.rank());
  for (int c = 0; c < from.rank(); ++c) {
    auto ideal = left_ideal_module(from.algebra, from.idempotents[c]);
    AlgebraModule moved =
        extend ? extend_scalars(f, *right_basis, ideal) : restrict_scalars(f, ideal);
    auto mult = k0_multiplicities(moved, to);
    long long n = from.blocks[c].matrix_size;
    for (int r = 0; r < to.rank(); ++r) {
      if (mult[r] % n != 0)
        throw check_error("induced K0 column is not divisible by the isotypic multiplicity");
      out.at(r, c) = mult[r] / n;
    }
  }
  return out;
}

} // namespace twmack
