#pragma once

#include <string>

#include "twmack/context.hpp"
#include "twmack/module.hpp"

namespace twmack {

/// Outcome of the exhaustive double-coset decomposition check for a triple
/// J, K <= H: the explicit shift-map isomorphism between
///   P = (+)_x Tr gamma^x_! Res (R_theta[K])   and   Q = Res Tr (R_theta[K])
/// as left R_theta[J]-modules, its compatibility with right multiplication by
/// R_theta[K] on every (generator, pure multiplier) pair, and equality of the
/// K0 classes of the two sides.
struct WitnessReport {
  bool left_module_iso = false;
  bool bimodule_commutes = false;
  bool k0_match = false;
  int double_cosets = 0;
  long long checked_pairs = 0;
  std::string failure_detail;

  bool passed() const { return left_module_iso && bimodule_commutes && k0_match; }
};

WitnessReport mackey_decomposition_witness(TwistedContext& ctx, const Subgroup& j,
                                           const Subgroup& k, const Subgroup& h);

} // namespace twmack
