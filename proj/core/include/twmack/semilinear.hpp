#pragma once

#include <vector>

#include "twmack/module.hpp"

namespace twmack {

/// A finite free R-module R^n with a semilinear H-action: per subgroup element
/// a bijection table on the enumerated carrier (an element is its base-|R|
/// digit string of coordinates). Construction verifies additivity,
/// theta-semilinearity f(h)(r m) = theta_h(r) f(h)(m), and the cocycle
/// f(gh) = f(g) f(h); a failing check names the witness (h, r, m).
struct SemilinearModule {
  GRingPtr base;
  Subgroup h;
  int rank = 0;
  std::vector<std::vector<int>> maps; // maps[slot] is a table on |R|^rank points

  long long carrier_size() const;
  std::vector<int> coords_of(long long index) const;
  long long index_of(const std::vector<int>& coords) const;
};

SemilinearModule make_semilinear(GRingPtr base, Subgroup h, int rank,
                                 std::vector<std::vector<int>> maps);

/// Builds the tables from invertible matrices over R: f(h)(m) = A_h (theta_h m).
SemilinearModule semilinear_from_matrices(GRingPtr base, Subgroup h, int rank,
                                          const std::vector<std::vector<std::vector<int>>>& mats);

/// The module of the twisted group ring attached to semilinear data:
/// rg acts by m -> r f(g)(m). The carrier is the GF(p)-span of the
/// (module coordinate, field basis) pairs.
AlgebraModule semilinear_to_module(const SemilinearModule& s, const TGRAlgebra& alg);

/// Recovers semilinear data from a module over the twisted ring: f(h) is the
/// action of 1*h, the R-structure comes from the pure elements r*e.
SemilinearModule semilinear_from_module(const AlgebraModule& m, const TGRAlgebra& alg);

} // namespace twmack
