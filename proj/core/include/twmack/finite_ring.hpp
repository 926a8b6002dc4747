#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twmack/finite_field.hpp"

namespace twmack {

/// A finite commutative unital ring with full element enumeration; arithmetic
/// is table-based so that every ring-hom check can be exhaustive. When the
/// ring is a finite field the originating FiniteField is kept for the K0
/// pipeline; it is null for Z/n and products.
struct FiniteRing {
  int size = 0;
  int zero = 0, one = 1;
  std::vector<std::vector<int>> add, mul;
  std::vector<int> neg;
  FieldPtr field; // non-null iff built from a finite field
  std::string label;

  int plus(int a, int b) const { return add[a][b]; }
  int times(int a, int b) const { return mul[a][b]; }
  int minus(int a) const { return neg[a]; }
  int nat(int n) const; // n * 1
  bool is_unit(int r) const { return unit_inverse(r).has_value(); }
  std::optional<int> unit_inverse(int r) const;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr ring_from_field(FieldPtr f);
RingPtr zmod_ring(int n);
RingPtr product_ring(const RingPtr& a, const RingPtr& b);

} // namespace twmack
