#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twmack/matrix.hpp"

namespace twmack {

/// A finite-dimensional associative unital algebra over a finite field, given
/// by structure constants: b_i b_j = sum_k c[i][j][k] b_k. Associativity and
/// the two-sided unit are verified at construction.
struct StructureAlgebra {
  FieldPtr field;
  int dim = 0;
  std::vector<int> constants; // dim^3, c[(i*dim + j)*dim + k]
  std::vector<int> unit;      // coordinates of 1
  std::string label;

  int c(int i, int j, int k) const {
    return constants[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  /// b_i * b_j as a coordinate vector.
  std::vector<int> basis_product(int i, int j) const;
  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const;
  Matrix left_mult(const std::vector<int>& a) const;  // x -> a*x
  Matrix right_mult(const std::vector<int>& a) const; // x -> x*a
  bool is_commutative() const;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

AlgebraPtr make_structure_algebra(FieldPtr field, int dim, std::vector<int> constants,
                                  std::vector<int> unit, std::string label = "");

/// The induced algebra on a subspace that is closed under multiplication and
/// contains the unit (throws otherwise).
AlgebraPtr subalgebra(const StructureAlgebra& a, const std::vector<std::vector<int>>& basis,
                      std::string label = "");

/// Basis of the center {z : [b_i, z] = 0 for all i}.
std::vector<std::vector<int>> algebra_center(const StructureAlgebra& a);

/// Basis of {z : z^p = z} for a commutative algebra over a prime field.
std::vector<std::vector<int>> frobenius_fixed_space(const StructureAlgebra& z);

/// The primitive central idempotents of a semisimple algebra over GF(p),
/// computed by deterministic splitting of the Frobenius-fixed subalgebra of
/// the center; sorted by lexicographic coordinate order. Non-semisimple input
/// surfaces as a check_error diagnostic.
std::vector<std::vector<int>> primitive_central_idempotents(const StructureAlgebra& a);

struct BlockData {
  int block_dim = 0;        // dim e_c A
  int center_field_dim = 0; // d_c = dim e_c Z(A)
  int matrix_size = 0;      // n_c
  int simple_dim = 0;       // n_c * d_c
};
BlockData block_data(const StructureAlgebra& a, const std::vector<int>& idempotent);

/// Idempotents plus per-block invariants, in the canonical block order.
struct AlgebraK0 {
  AlgebraPtr algebra;
  std::vector<std::vector<int>> idempotents;
  std::vector<BlockData> blocks;
  int rank() const { return static_cast<int>(idempotents.size()); }
};
AlgebraK0 algebra_k0(AlgebraPtr a);

} // namespace twmack
