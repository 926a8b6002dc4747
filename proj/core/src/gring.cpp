#include "twmack/gring.hpp"

#include <algorithm>

#include "twmack/errors.hpp"

namespace twmack {

GRingPtr make_gring(RingPtr ring, GroupPtr group, std::vector<std::vector<int>> theta,
                    std::string label) {
  const int n = ring->size;
  if (static_cast<int>(theta.size()) != group->order)
    throw validation_error("theta must provide one table per group element");
  for (int g = 0; g < group->order; ++g) {
    const auto& t = theta[g];
    if (static_cast<int>(t.size()) != n) throw validation_error("theta table has wrong size");
    std::vector<char> hit(n, 0);
    for (int r = 0; r < n; ++r) {
      if (t[r] < 0 || t[r] >= n || hit[t[r]]++)
        throw validation_error("theta[" + std::to_string(g) + "] is not a bijection");
    }
    if (t[ring->one] != ring->one)
      throw validation_error("theta[" + std::to_string(g) + "] does not fix 1");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (t[ring->plus(a, b)] != ring->plus(t[a], t[b]))
          throw validation_error("theta[" + std::to_string(g) + "] is not additive at (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ")");
        if (t[ring->times(a, b)] != ring->times(t[a], t[b]))
          throw validation_error("theta[" + std::to_string(g) + "] is not multiplicative at (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ")");
      }
  }
  for (int r = 0; r < n; ++r)
    if (theta[group->identity][r] != r)
      throw validation_error("theta at the identity is not the identity map");
  for (int g = 0; g < group->order; ++g)
    for (int h = 0; h < group->order; ++h)
      for (int r = 0; r < n; ++r)
        if (theta[group->mul(g, h)][r] != theta[g][theta[h][r]])
          throw validation_error("theta is not a group homomorphism at (" + std::to_string(g) +
                                 ", " + std::to_string(h) + ")");

  // invertibility gate: |ker theta| * 1 must be a unit
  int kernel_order = 0;
  for (int g = 0; g < group->order; ++g) {
    bool trivial = true;
    for (int r = 0; r < n && trivial; ++r) trivial = theta[g][r] == r;
    if (trivial) ++kernel_order;
  }
  if (!ring->is_unit(ring->nat(kernel_order)))
    throw validation_error(
        "the group order is not invertible in the base ring (the standing hypothesis "
        "|G|^{-1} in R fails for the kernel of the action): |ker theta| = " +
        std::to_string(kernel_order) + " is not a unit in " + ring->label);

  auto out = std::make_shared<GRing>();
  out->label = label.empty() ? ring->label + "_theta[" + group->label + "]" : std::move(label);
  out->ring = std::move(ring);
  out->group = std::move(group);
  out->theta = std::move(theta);
  return out;
}

GRingPtr trivial_gring(const RingPtr& ring, const GroupPtr& group) {
  std::vector<int> id(ring->size);
  for (int r = 0; r < ring->size; ++r) id[r] = r;
  std::vector<std::vector<int>> theta(group->order, id);
  return make_gring(ring, group, std::move(theta),
                    ring->label + "[" + group->label + "] (trivial action)");
}

GRingPtr frobenius_gring(const FieldPtr& field, const GroupPtr& cyclic, int power) {
  // require the group to actually be cyclic with generator 1: g = 1+1+...+1
  for (int g = 0; g < cyclic->order; ++g) {
    int built = cyclic->identity;
    for (int i = 0; i < g; ++i) built = cyclic->mul(built, 1 % cyclic->order);
    if (built != g)
      throw validation_error("frobenius_gring expects cyclic_group(n) element indexing");
  }
  RingPtr ring = ring_from_field(field);
  const int n = ring->size;
  std::vector<std::vector<int>> theta(cyclic->order, std::vector<int>(n));
  for (int g = 0; g < cyclic->order; ++g)
    for (int r = 0; r < n; ++r) {
      int x = r;
      for (int i = 0; i < g * power; ++i) x = field->frobenius(x);
      theta[g][r] = x;
    }
  return make_gring(ring, cyclic, std::move(theta),
                    field->label + "_frob" + std::to_string(power) + "[" + cyclic->label + "]");
}

FixedSubring fixed_subring(const GRingPtr& r, const Subgroup& h) {
  const auto& ring = *r->ring;
  FixedSubring out;
  out.from_parent.assign(ring.size, -1);
  for (int x = 0; x < ring.size; ++x) {
    bool fixed = true;
    for (int g : h.elements)
      if (r->act(g, x) != x) {
        fixed = false;
        break;
      }
    if (fixed) {
      out.from_parent[x] = static_cast<int>(out.to_parent.size());
      out.to_parent.push_back(x);
    }
  }
  const int m = static_cast<int>(out.to_parent.size());
  auto sub = std::make_shared<FiniteRing>();
  sub->size = m;
  sub->zero = out.from_parent[ring.zero];
  sub->one = out.from_parent[ring.one];
  sub->add.assign(m, std::vector<int>(m));
  sub->mul.assign(m, std::vector<int>(m));
  sub->neg.resize(m);
  for (int i = 0; i < m; ++i) {
    sub->neg[i] = out.from_parent[ring.minus(out.to_parent[i])];
    for (int j = 0; j < m; ++j) {
      int s = ring.plus(out.to_parent[i], out.to_parent[j]);
      int p = ring.times(out.to_parent[i], out.to_parent[j]);
      if (out.from_parent[s] < 0 || out.from_parent[p] < 0)
        throw check_error("fixed points are not closed under the ring operations");
      sub->add[i][j] = out.from_parent[s];
      sub->mul[i][j] = out.from_parent[p];
    }
  }
  sub->label = ring.label + "^H" + std::to_string(h.order());
  out.ring = std::move(sub);
  return out;
}

} // namespace twmack
