#include "twmack/algebra.hpp"

#include <algorithm>

#include "twmack/errors.hpp"

namespace twmack {

std::vector<int> StructureAlgebra::basis_product(int i, int j) const {
  std::vector<int> out(dim);
  for (int k = 0; k < dim; ++k) out[k] = c(i, j, k);
  return out;
}

std::vector<int> StructureAlgebra::mul(const std::vector<int>& a,
                                       const std::vector<int>& b) const {
  const auto& f = *field;
  std::vector<int> out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      int s = f.mul(a[i], b[j]);
      for (int k = 0; k < dim; ++k) {
        int cc = c(i, j, k);
        if (cc != 0) out[k] = f.add(out[k], f.mul(s, cc));
      }
    }
  }
  return out;
}

Matrix StructureAlgebra::left_mult(const std::vector<int>& a) const {
  const auto& f = *field;
  Matrix m(field, dim, dim);
  for (int j = 0; j < dim; ++j) // column j = a * b_j
    for (int i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (int k = 0; k < dim; ++k) {
        int cc = c(i, j, k);
        if (cc != 0) m.at(k, j) = f.add(m.at(k, j), f.mul(a[i], cc));
      }
    }
  return m;
}

Matrix StructureAlgebra::right_mult(const std::vector<int>& a) const {
  const auto& f = *field;
  Matrix m(field, dim, dim);
  for (int j = 0; j < dim; ++j) // column j = b_j * a
    for (int i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (int k = 0; k < dim; ++k) {
        int cc = c(j, i, k);
        if (cc != 0) m.at(k, j) = f.add(m.at(k, j), f.mul(a[i], cc));
      }
    }
  return m;
}

bool StructureAlgebra::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

AlgebraPtr make_structure_algebra(FieldPtr field, int dim, std::vector<int> constants,
                                  std::vector<int> unit, std::string label) {
  if (dim < 1) throw validation_error("algebra dimension must be positive");
  if (constants.size() != static_cast<size_t>(dim) * dim * dim)
    throw validation_error("structure constant array has the wrong size");
  if (static_cast<int>(unit.size()) != dim) throw validation_error("unit vector has wrong length");
  auto a = std::make_shared<StructureAlgebra>();
  a->field = std::move(field);
  a->dim = dim;
  a->constants = std::move(constants);
  a->unit = std::move(unit);
  a->label = label.empty() ? "A" + std::to_string(dim) : std::move(label);

  const auto& f = *a->field;
  // associativity on basis triples: (b_i b_j) b_k == b_i (b_j b_k)
  std::vector<int> lhs(dim), rhs(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (int m = 0; m < dim; ++m) {
          int cij = a->c(i, j, m);
          if (cij != 0)
            for (int t = 0; t < dim; ++t) {
              int cmk = a->c(m, k, t);
              if (cmk != 0) lhs[t] = f.add(lhs[t], f.mul(cij, cmk));
            }
          int cjk = a->c(j, k, m);
          if (cjk != 0)
            for (int t = 0; t < dim; ++t) {
              int cim = a->c(i, m, t);
              if (cim != 0) rhs[t] = f.add(rhs[t], f.mul(cjk, cim));
            }
        }
        if (lhs != rhs)
          throw check_error("structure constants are not associative at basis triple (" +
                            std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ") in " + a->label);
      }
    }
  // two-sided unit
  for (int j = 0; j < dim; ++j) {
    std::vector<int> ej(dim, 0);
    ej[j] = 1;
    if (a->mul(a->unit, ej) != ej || a->mul(ej, a->unit) != ej)
      throw check_error("declared unit is not a two-sided identity in " + a->label);
  }
  return a;
}

AlgebraPtr subalgebra(const StructureAlgebra& a, const std::vector<std::vector<int>>& basis,
                      std::string label) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) throw validation_error("subalgebra basis is empty");
  Matrix u(a.field, a.dim, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < a.dim; ++i)
      u.at(i, j) = basis[j][i];
  if (matrix_rank(u) != m) throw validation_error("subalgebra basis is dependent");

  std::vector<int> constants(static_cast<size_t>(m) * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto prod = a.mul(basis[i], basis[j]);
      auto coords = coordinates_in_basis(u, prod); // throws when not closed
      for (int k = 0; k < m; ++k)
        constants[(static_cast<size_t>(i) * m + j) * m + k] = coords[k];
    }
  auto unit_coords = coordinates_in_basis(u, a.unit);
  return make_structure_algebra(a.field, m, std::move(constants), std::move(unit_coords),
                                label.empty() ? a.label + "-sub" : std::move(label));
}

std::vector<std::vector<int>> algebra_center(const StructureAlgebra& a) {
  const auto& f = *a.field;
  const int d = a.dim;
  // rows: for each basis element i and coordinate k, sum_j z_j (c_{ij}^k - c_{ji}^k) = 0
  Matrix sys(a.field, d * d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        sys.at(i * d + k, j) = f.sub(a.c(i, j, k), a.c(j, i, k));
  return rref_solve(sys).kernel;
}

std::vector<std::vector<int>> frobenius_fixed_space(const StructureAlgebra& z) {
  if (!z.field->is_prime_field())
    throw unsupported_error("frobenius_fixed_space expects an algebra over a prime field");
  if (!z.is_commutative())
    throw validation_error("frobenius_fixed_space expects a commutative algebra");
  const auto& f = *z.field;
  const int p = f.p, d = z.dim;
  // z -> z^p is linear in characteristic p on a commutative algebra
  Matrix frob(z.field, d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<int> v(d, 0);
    v[j] = 1;
    std::vector<int> power = z.unit;
    for (int t = 0; t < p; ++t) power = z.mul(power, v);
    for (int i = 0; i < d; ++i) frob.at(i, j) = power[i];
  }
  Matrix sys = frob.sub(Matrix::identity(z.field, d));
  return rref_solve(sys).kernel;
}

namespace {

/// Minimal monic polynomial of b relative to the unit e (both coordinate
/// vectors in A, with b in the commutative subalgebra e*Z). Returned low
/// degree first, trailing coefficient 1.
std::vector<int> relative_min_poly(const StructureAlgebra& a, const std::vector<int>& e,
                                   const std::vector<int>& b) {
  std::vector<std::vector<int>> powers{e};
  while (true) {
    auto next = a.mul(powers.back(), b);
    Matrix u(a.field, a.dim, static_cast<int>(powers.size()));
    for (size_t j = 0; j < powers.size(); ++j)
      for (int i = 0; i < a.dim; ++i)
        u.at(i, static_cast<int>(j)) = powers[j][i];
    Matrix rhs(a.field, a.dim, 1);
    for (int i = 0; i < a.dim; ++i) rhs.at(i, 0) = next[i];
    auto res = rref_solve(u, &rhs);
    if (res.consistent) {
      // next = sum coeff_j powers[j]; min poly = x^m - sum coeff_j x^j
      std::vector<int> poly(powers.size() + 1);
      for (size_t j = 0; j < powers.size(); ++j) poly[j] = a.field->neg(res.solution->at(static_cast<int>(j), 0));
      poly.back() = 1;
      return poly;
    }
    powers.push_back(std::move(next));
    if (powers.size() > static_cast<size_t>(a.dim) + 1)
      throw check_error("minimal polynomial search exceeded the algebra dimension");
  }
}

} // namespace

std::vector<std::vector<int>> primitive_central_idempotents(const StructureAlgebra& a) {
  if (!a.field->is_prime_field())
    throw unsupported_error("idempotent splitting expects an algebra over a prime field");
  const auto& f = *a.field;
  const int p = f.p;

  auto center = algebra_center(a);
  auto zalg = subalgebra(a, center, a.label + "-center");
  auto fixed_z = frobenius_fixed_space(*zalg); // coordinates in the center basis
  const int target = static_cast<int>(fixed_z.size());

  // lift the fixed-space basis back to A coordinates
  std::vector<std::vector<int>> fixed;
  for (const auto& zc : fixed_z) {
    std::vector<int> v(a.dim, 0);
    for (size_t j = 0; j < center.size(); ++j)
      if (zc[j] != 0)
        for (int i = 0; i < a.dim; ++i) v[i] = f.add(v[i], f.mul(zc[j], center[j][i]));
    fixed.push_back(std::move(v));
  }

  std::vector<std::vector<int>> idems{a.unit};
  bool progress = true;
  while (static_cast<int>(idems.size()) < target && progress) {
    progress = false;
    for (size_t ei = 0; ei < idems.size() && !progress; ++ei) {
      for (const auto& b : fixed) {
        auto be = a.mul(idems[ei], b);
        // split unless b*e is a scalar multiple of e
        Matrix u(a.field, a.dim, 1);
        for (int i = 0; i < a.dim; ++i) u.at(i, 0) = idems[ei][i];
        Matrix rhs(a.field, a.dim, 1);
        for (int i = 0; i < a.dim; ++i) rhs.at(i, 0) = be[i];
        if (rref_solve(u, &rhs).consistent) continue;

        auto poly = relative_min_poly(a, idems[ei], be);
        const int deg = static_cast<int>(poly.size()) - 1;
        std::vector<int> roots;
        for (int lambda = 0; lambda < p; ++lambda) {
          int val = 0, x = 1;
          for (int t = 0; t <= deg; ++t) {
            val = f.add(val, f.mul(poly[t], x));
            x = f.mul(x, lambda);
          }
          if (val == 0) roots.push_back(lambda);
        }
        if (static_cast<int>(roots.size()) != deg)
          throw check_error("idempotent splitting failed: minimal polynomial of a "
                            "Frobenius-fixed element does not split into distinct roots; "
                            "input algebra is not split semisimple: " + a.label);

        std::vector<std::vector<int>> parts;
        for (int lambda : roots) {
          std::vector<int> proj = idems[ei]; // Lagrange projector at lambda
          for (int mu : roots) {
            if (mu == lambda) continue;
            // proj *= (be - mu*e) / (lambda - mu)
            std::vector<int> factor(a.dim);
            int scale = f.inv(f.sub(lambda, mu));
            for (int i = 0; i < a.dim; ++i)
              factor[i] = f.mul(scale, f.sub(be[i], f.mul(mu, idems[ei][i])));
            proj = a.mul(proj, factor);
          }
          parts.push_back(std::move(proj));
        }
        idems.erase(idems.begin() + static_cast<long>(ei));
        idems.insert(idems.end(), parts.begin(), parts.end());
        progress = true;
        break;
      }
    }
  }
  if (static_cast<int>(idems.size()) != target)
    throw check_error("idempotent count " + std::to_string(idems.size()) +
                      " does not match the Frobenius-fixed dimension " + std::to_string(target) +
                      " in " + a.label);

  std::sort(idems.begin(), idems.end());
  // orthogonality and completeness are exact-equality postconditions
  std::vector<int> sum(a.dim, 0);
  for (const auto& e : idems)
    for (int i = 0; i < a.dim; ++i) sum[i] = f.add(sum[i], e[i]);
  if (sum != a.unit) throw check_error("central idempotents do not sum to 1 in " + a.label);
  for (size_t i = 0; i < idems.size(); ++i)
    for (size_t j = 0; j < idems.size(); ++j) {
      auto prod = a.mul(idems[i], idems[j]);
      if (i == j ? prod != idems[i] : prod != std::vector<int>(a.dim, 0))
        throw check_error("central idempotents are not orthogonal idempotents in " + a.label);
    }
  return idems;
}

BlockData block_data(const StructureAlgebra& a, const std::vector<int>& idempotent) {
  BlockData out;
  out.block_dim = matrix_rank(a.left_mult(idempotent));
  auto center = algebra_center(a);
  Matrix img(a.field, a.dim, static_cast<int>(center.size()));
  for (size_t j = 0; j < center.size(); ++j) {
    auto ez = a.mul(idempotent, center[j]);
    for (int i = 0; i < a.dim; ++i) img.at(i, static_cast<int>(j)) = ez[i];
  }
  out.center_field_dim = matrix_rank(img);
  if (out.center_field_dim == 0 || out.block_dim % out.center_field_dim != 0)
    throw check_error("block dimension is not divisible by its center field degree");
  int q = out.block_dim / out.center_field_dim;
  int n = 0;
  while ((n + 1) * (n + 1) <= q) ++n;
  if (n * n != q)
    throw check_error("block of " + a.label + " is not a matrix algebra over its center "
                      "(dimension ratio " + std::to_string(q) + " is not a perfect square); "
                      "input is likely not semisimple");
  out.matrix_size = n;
  out.simple_dim = n * out.center_field_dim;
  return out;
}

AlgebraK0 algebra_k0(AlgebraPtr a) {
  AlgebraK0 out;
  out.idempotents = primitive_central_idempotents(*a);
  out.blocks.reserve(out.idempotents.size());
  for (const auto& e : out.idempotents) out.blocks.push_back(block_data(*a, e));
  out.algebra = std::move(a);
  return out;
}

} // namespace twmack
