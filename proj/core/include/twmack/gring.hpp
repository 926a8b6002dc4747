#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twmack/finite_ring.hpp"
#include "twmack/group.hpp"

namespace twmack {

/// A finite commutative ring together with a group acting by verified ring
/// automorphisms. Construction checks that every theta[g] is an automorphism,
/// that theta is a group homomorphism, and the invertibility gate: the order
/// of the kernel of theta must be a unit in the ring (for a trivial action
/// this is the usual |G| condition; faithful Galois actions always pass).
struct GRing {
  RingPtr ring;
  GroupPtr group;
  std::vector<std::vector<int>> theta; // theta[g][r]
  std::string label;

  int act(int g, int r) const { return theta[g][r]; }
};

using GRingPtr = std::shared_ptr<const GRing>;

GRingPtr make_gring(RingPtr ring, GroupPtr group, std::vector<std::vector<int>> theta,
                    std::string label = "");
GRingPtr trivial_gring(const RingPtr& ring, const GroupPtr& group);
/// Cyclic group acting on a field by powers of the Frobenius: the generator
/// (element 1 of cyclic_group(n)) acts as x -> x^(p^power).
GRingPtr frobenius_gring(const FieldPtr& field, const GroupPtr& cyclic, int power = 1);

/// The fixed subring R^H as a standalone ring plus the embedding.
struct FixedSubring {
  RingPtr ring;                // R^H with its own element indexing
  std::vector<int> to_parent;  // local -> parent element index
  std::vector<int> from_parent; // parent -> local or -1
};
FixedSubring fixed_subring(const GRingPtr& r, const Subgroup& h);

} // namespace twmack
