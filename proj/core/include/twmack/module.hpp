#pragma once

#include <vector>

#include "twmack/algebra.hpp"
#include "twmack/int_matrix.hpp"
#include "twmack/twisted.hpp"

namespace twmack {

/// A finitely generated left module over a structure algebra: one action
/// matrix per algebra basis element. Multiplicativity against the structure
/// constants and unitality are checked at construction; all modules here are
/// projective because the algebras in the pipeline are semisimple.
struct AlgebraModule {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<Matrix> action;

  Matrix act(const std::vector<int>& coords) const;
};

AlgebraModule make_module(AlgebraPtr algebra, std::vector<Matrix> action);
AlgebraModule regular_module(const AlgebraPtr& algebra);
AlgebraModule zero_module(const AlgebraPtr& algebra);
AlgebraModule direct_sum(const AlgebraModule& m, const AlgebraModule& n);

/// Same carrier, action through f: rho_A(a) = rho_B(f(a)).
AlgebraModule restrict_scalars(const AlgebraHom& f, const AlgebraModule& m);

/// B (x)_A M along f, where B is free as a right A-module on the given basis
/// vectors z_j (coordinates in B). The carrier is the direct sum of one copy
/// of M per z_j; the action decomposes b z_j over the right basis.
AlgebraModule extend_scalars(const AlgebraHom& f, const std::vector<std::vector<int>>& right_basis,
                             const AlgebraModule& m);

/// The left ideal A e as a left module (e an idempotent).
AlgebraModule left_ideal_module(const AlgebraPtr& algebra, const std::vector<int>& idempotent);

/// Block multiplicities of a module: entry c = dim(e_c M) / (n_c d_c), with
/// exact division enforced (a semisimplicity tripwire).
std::vector<long long> k0_multiplicities(const AlgebraModule& m, const AlgebraK0& k0);

struct K0Class {
  std::vector<long long> mult; // per block, in canonical block order
  bool operator==(const K0Class& o) const { return mult == o.mult; }
};
K0Class k0_class(const AlgebraModule& m);

enum class ScalarKind { Extend, Restrict };

/// The matrix of K0 applied to extension or restriction of scalars along f,
/// acting on column vectors of block multiplicities. Columns are computed on
/// the isotypic ideals A e_c = S_c^{n_c} with exact division by n_c.
/// Extension needs the right basis of the target over the source.
IntMat k0_induced_map(const AlgebraHom& f, ScalarKind kind, const AlgebraK0& src_k0,
                      const AlgebraK0& dst_k0,
                      const std::vector<std::vector<int>>* right_basis = nullptr);

} // namespace twmack
