#pragma once

#include "twmack/context.hpp"
#include "twmack/mackey.hpp"

namespace twmack {

/// The Burnside Mackey functor: M(H) = A(H), free on the conjugacy classes of
/// subgroups of H; restriction forgets and decomposes, transfer induces,
/// conjugation transports.
MackeyData burnside_mackey(const GroupPtr& g);

/// K0 of the twisted group rings R_theta[H], with restriction/transfer induced
/// by restriction/extension of scalars along the inclusions and conjugation by
/// extension along the conjugation isomorphisms.
MackeyData k0_twisted_mackey(TwistedContext& ctx);

/// Unit groups of the fixed fields of GF(p^k) under the Frobenius action of
/// the cyclic Galois group: restriction is the inclusion of the smaller
/// field's units, transfer is the field norm, conjugation is the Galois action.
MackeyData units_galois_mackey(int p, int k);

/// K0 of the endomorphism rings End_{R^H}(R), built directly on the
/// endomorphism side; requires the twisted-ring-to-endomorphism comparison map
/// to be an isomorphism at every subgroup. The report also confirms the two
/// comparison squares (inclusion and conjugation) commute on pure elements.
struct EndoMackeyResult {
  MackeyData data;
  bool squares_commute = false;
  std::string detail;
};
EndoMackeyResult endomorphism_mackey(TwistedContext& ctx);

/// For a trivial action: compares the twisted pipeline against an
/// independently built untwisted group-ring pipeline, entry for entry.
struct DressKukuReport {
  bool identical = false;
  std::string detail;
  MackeyData twisted;
  MackeyData untwisted;
};
DressKukuReport dress_kuku_compare(TwistedContext& ctx);

/// Data-level instance of the odd K-groups of the fixed fields, with values
/// Z/(p^{di} - 1) and the canonical injections/surjections. The values come
/// from an external computation, so the instance is flagged external_data;
/// at i = 1 it must agree with units_galois_mackey (hard failure otherwise).
MackeyData quillen_kn_instance(int p, int k, int i);

/// The deliberately broken negative control: all values Z, all maps identity.
/// Fails MF6 exactly when some double coset count exceeds 1.
MackeyData constant_z_mackey(const GroupPtr& g);

} // namespace twmack
