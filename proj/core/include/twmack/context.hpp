#pragma once

#include <map>

#include "twmack/algebra.hpp"
#include "twmack/twisted.hpp"

namespace twmack {

/// Per-G-ring cache of twisted rings, their structure algebras, and block
/// data, keyed by the subgroup's element set. Everything cached is immutable.
struct TwistedContext {
  GRingPtr ring;

  explicit TwistedContext(GRingPtr r) : ring(std::move(r)) {}

  const TGRPtr& twisted(const Subgroup& h) {
    auto it = rings_.find(h.elements);
    if (it == rings_.end())
      it = rings_.emplace(h.elements, make_twisted_ring(ring, h)).first;
    return it->second;
  }
  const TGRAlgebra& algebra(const Subgroup& h) {
    auto it = algebras_.find(h.elements);
    if (it == algebras_.end())
      it = algebras_.emplace(h.elements, as_structure_algebra(twisted(h))).first;
    return it->second;
  }
  const AlgebraK0& k0(const Subgroup& h) {
    auto it = k0s_.find(h.elements);
    if (it == k0s_.end())
      it = k0s_.emplace(h.elements, algebra_k0(algebra(h).algebra)).first;
    return it->second;
  }

private:
  std::map<std::vector<int>, TGRPtr> rings_;
  std::map<std::vector<int>, TGRAlgebra> algebras_;
  std::map<std::vector<int>, AlgebraK0> k0s_;
};

} // namespace twmack
