#include "twmack/twisted.hpp"

#include <algorithm>

#include "twmack/errors.hpp"

namespace twmack {

namespace {

FieldPtr prime_field(int p) { return FiniteField::make(p, 1); }

} // namespace

TwistedGroupRing::Elem TwistedGroupRing::one() const { return pure(base->group->identity, base->ring->one); }

TwistedGroupRing::Elem TwistedGroupRing::pure(int g, int r) const {
  if (g < 0 || g >= base->group->order || slot_of[g] < 0)
    throw validation_error("pure element outside the subgroup in " + label);
  Elem e = zero();
  e[slot_of[g]] = r;
  return e;
}

TwistedGroupRing::Elem TwistedGroupRing::add(const Elem& a, const Elem& b) const {
  const auto& ring = *base->ring;
  Elem out(rank());
  for (int s = 0; s < rank(); ++s) out[s] = ring.plus(a[s], b[s]);
  return out;
}

TwistedGroupRing::Elem TwistedGroupRing::neg(const Elem& a) const {
  const auto& ring = *base->ring;
  Elem out(rank());
  for (int s = 0; s < rank(); ++s) out[s] = ring.minus(a[s]);
  return out;
}

std::pair<int, int> TwistedGroupRing::mul_pure(int g1, int r1, int g2, int r2) const {
  const auto& ring = *base->ring;
  return {base->group->mul(g1, g2), ring.times(r1, base->act(g1, r2))};
}

TwistedGroupRing::Elem TwistedGroupRing::mul(const Elem& a, const Elem& b) const {
  const auto& ring = *base->ring;
  Elem out = zero();
  for (int s1 = 0; s1 < rank(); ++s1) {
    if (a[s1] == ring.zero) continue;
    int g1 = group_elem(s1);
    for (int s2 = 0; s2 < rank(); ++s2) {
      if (b[s2] == ring.zero) continue;
      auto [g, r] = mul_pure(g1, a[s1], group_elem(s2), b[s2]);
      int s = slot_of[g];
      out[s] = ring.plus(out[s], r);
    }
  }
  return out;
}

bool TwistedGroupRing::is_zero(const Elem& a) const {
  for (int v : a)
    if (v != base->ring->zero) return false;
  return true;
}

std::string TwistedGroupRing::show(const Elem& a) const {
  std::string out;
  for (int s = 0; s < rank(); ++s) {
    if (a[s] == base->ring->zero) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(a[s]) + "*g" + std::to_string(group_elem(s));
  }
  return out.empty() ? "0" : out;
}

TGRPtr make_twisted_ring(GRingPtr base, Subgroup sub) {
  if (sub.parent.get() != base->group.get())
    throw validation_error("subgroup does not belong to the acting group");
  auto t = std::make_shared<TwistedGroupRing>();
  t->slot_of.assign(base->group->order, -1);
  for (int s = 0; s < sub.order(); ++s) t->slot_of[sub.elements[s]] = s;
  t->label = base->ring->label + "_theta[H" + std::to_string(sub.order()) + "]";
  t->base = std::move(base);
  t->sub = std::move(sub);
  return t;
}

namespace {

TGRHom finalize_hom(TGRHom hom) {
  const auto& src = *hom.src;
  const auto& dst = *hom.dst;
  const auto& ring = *src.base->ring;
  // unitality
  if (hom.pure_images[src.slot_of[src.base->group->identity]][ring.one] != dst.one())
    throw check_error("homomorphism does not preserve 1: " + hom.label);
  for (int s = 0; s < src.rank(); ++s)
    if (!dst.is_zero(hom.pure_images[s][ring.zero]))
      throw check_error("homomorphism image of 0 is nonzero: " + hom.label);
  // multiplicativity on all pure pairs
  for (int s1 = 0; s1 < src.rank(); ++s1)
    for (int r1 = 0; r1 < ring.size; ++r1) {
      if (r1 == ring.zero) continue;
      for (int s2 = 0; s2 < src.rank(); ++s2)
        for (int r2 = 0; r2 < ring.size; ++r2) {
          if (r2 == ring.zero) continue;
          auto [g, r] = src.mul_pure(src.group_elem(s1), r1, src.group_elem(s2), r2);
          auto lhs = hom.pure_images[src.slot_of[g]][r];
          auto rhs = dst.mul(hom.pure_images[s1][r1], hom.pure_images[s2][r2]);
          if (lhs != rhs)
            throw check_error("homomorphism is not multiplicative at pure pair (" +
                              std::to_string(r1) + "*g" + std::to_string(src.group_elem(s1)) +
                              ", " + std::to_string(r2) + "*g" +
                              std::to_string(src.group_elem(s2)) + "): " + hom.label);
        }
    }
  return hom;
}

} // namespace

TwistedGroupRing::Elem TGRHom::apply(const TwistedGroupRing::Elem& a) const {
  auto out = dst->zero();
  const int zero = src->base->ring->zero;
  for (int s = 0; s < src->rank(); ++s)
    if (a[s] != zero) out = dst->add(out, pure_images[s][a[s]]);
  return out;
}

TGRHom tau_hom(const TGRPtr& src, int x, const TGRPtr& dst) {
  const auto& g = *src->base->group;
  const int xi = g.inv(x);
  for (int h : src->sub.elements)
    if (dst->slot_of[g.conj(xi, h)] < 0)
      throw validation_error("tau requires x^{-1}Hx <= K; fails at h = " + std::to_string(h));
  TGRHom hom;
  hom.src = src;
  hom.dst = dst;
  hom.label = "tau(x=" + std::to_string(x) + ")";
  const int rsize = src->base->ring->size;
  hom.pure_images.assign(src->rank(), std::vector<TwistedGroupRing::Elem>(rsize));
  for (int s = 0; s < src->rank(); ++s)
    for (int r = 0; r < rsize; ++r)
      hom.pure_images[s][r] =
          dst->pure(g.conj(xi, src->group_elem(s)), src->base->act(xi, r));
  return finalize_hom(std::move(hom));
}

TGRHom rho_hom(const TGRPtr& src, const TGRPtr& dst) {
  auto hom = tau_hom(src, src->base->group->identity, dst);
  hom.label = "rho";
  return hom;
}

TGRHom gamma_hom(const TGRPtr& src, int g, const TGRPtr& dst) {
  auto hom = tau_hom(src, src->base->group->inv(g), dst);
  hom.label = "gamma(g=" + std::to_string(g) + ")";
  return hom;
}

TGRHom compose_homs(const TGRHom& second, const TGRHom& first) {
  if (first.dst.get() != second.src.get())
    throw validation_error("homomorphisms are not composable");
  TGRHom hom;
  hom.src = first.src;
  hom.dst = second.dst;
  hom.label = second.label + " o " + first.label;
  const int rsize = first.src->base->ring->size;
  hom.pure_images.assign(first.src->rank(), std::vector<TwistedGroupRing::Elem>(rsize));
  for (int s = 0; s < first.src->rank(); ++s)
    for (int r = 0; r < rsize; ++r)
      hom.pure_images[s][r] = second.apply(first.pure_images[s][r]);
  return finalize_hom(std::move(hom));
}

TwistedGroupRing::Elem ShiftMap::apply(const TwistedGroupRing::Elem& a) const {
  const auto& t = *ring;
  auto out = t.zero();
  for (int s = 0; s < t.rank(); ++s) {
    if (a[s] == t.base->ring->zero) continue;
    out[t.slot_of[t.base->group->mul(t.group_elem(s), y)]] = a[s];
  }
  return out;
}

ShiftMap shift_map(const TGRPtr& k, int y) {
  if (k->slot_of[y] < 0) throw validation_error("shift element must lie in the subgroup");
  return ShiftMap{k, y};
}

LeftBasisDecomposition left_basis_decompose(const TGRPtr& small, const TGRPtr& big) {
  if (small->base.get() != big->base.get())
    throw validation_error("decomposition requires twisted rings over the same G-ring");
  LeftBasisDecomposition d;
  d.small = small;
  d.big = big;
  d.reps = right_coset_reps(small->sub, big->sub);
  return d;
}

TwistedGroupRing::Elem LeftBasisDecomposition::forward(
    const std::vector<TwistedGroupRing::Elem>& comps) const {
  if (comps.size() != reps.size()) throw validation_error("component count mismatch");
  const auto& g = *big->base->group;
  auto out = big->zero();
  for (size_t i = 0; i < reps.size(); ++i) {
    // (r h) * (1 y_i) = r * (h y_i): coefficients transfer unchanged
    for (int s = 0; s < small->rank(); ++s) {
      int r = comps[i][s];
      if (r == big->base->ring->zero) continue;
      int slot = big->slot_of[g.mul(small->group_elem(s), reps[i])];
      out[slot] = big->base->ring->plus(out[slot], r);
    }
  }
  return out;
}

std::vector<TwistedGroupRing::Elem> LeftBasisDecomposition::express(
    const TwistedGroupRing::Elem& x) const {
  const auto& g = *big->base->group;
  std::vector<TwistedGroupRing::Elem> comps(reps.size(), small->zero());
  for (int s = 0; s < big->rank(); ++s) {
    int r = x[s];
    if (r == big->base->ring->zero) continue;
    int k = big->group_elem(s);
    bool placed = false;
    for (size_t i = 0; i < reps.size() && !placed; ++i) {
      int h = g.mul(k, g.inv(reps[i]));
      if (small->slot_of[h] >= 0) {
        auto& c = comps[i][small->slot_of[h]];
        c = small->base->ring->plus(c, r);
        placed = true;
      }
    }
    if (!placed) throw check_error("element does not lie in the coset decomposition");
  }
  return comps;
}

RightBasisExpression right_basis_express(const TGRPtr& small, const TGRPtr& big) {
  if (small->base.get() != big->base.get())
    throw validation_error("expression requires twisted rings over the same G-ring");
  RightBasisExpression d;
  d.small = small;
  d.big = big;
  d.reps = left_coset_reps(small->sub, big->sub);
  return d;
}

std::vector<TwistedGroupRing::Elem> RightBasisExpression::express(
    const TwistedGroupRing::Elem& x) const {
  const auto& g = *big->base->group;
  std::vector<TwistedGroupRing::Elem> comps(reps.size(), small->zero());
  for (int s = 0; s < big->rank(); ++s) {
    int r = x[s];
    if (r == big->base->ring->zero) continue;
    int k = big->group_elem(s);
    bool placed = false;
    for (size_t j = 0; j < reps.size() && !placed; ++j) {
      int h = g.mul(g.inv(reps[j]), k);
      if (small->slot_of[h] >= 0) {
        // rk = (1 z_j) * (theta_{z_j^{-1}}(r) h)
        int coeff = big->base->act(g.inv(reps[j]), r);
        auto& c = comps[j][small->slot_of[h]];
        c = small->base->ring->plus(c, coeff);
        placed = true;
      }
    }
    if (!placed) throw check_error("element does not lie in the left coset decomposition");
  }
  return comps;
}

TwistedGroupRing::Elem RightBasisExpression::assemble(
    const std::vector<TwistedGroupRing::Elem>& comps) const {
  if (comps.size() != reps.size()) throw validation_error("component count mismatch");
  auto out = big->zero();
  for (size_t j = 0; j < reps.size(); ++j) {
    auto zj = big->pure(reps[j], big->base->ring->one);
    // promote comps[j] into the big ring, then multiply on the right
    auto promoted = big->zero();
    for (int s = 0; s < small->rank(); ++s) promoted[big->slot_of[small->group_elem(s)]] = comps[j][s];
    out = big->add(out, big->mul(zj, promoted));
  }
  return out;
}

TGRAlgebra as_structure_algebra(const TGRPtr& t) {
  const auto& ring = *t->base->ring;
  if (!ring.field)
    throw unsupported_error("the K0 pipeline requires a finite field base ring, got " +
                            ring.label);
  const auto& F = *ring.field;
  TGRAlgebra out;
  out.ring = t;
  out.prime = prime_field(F.p);
  out.field_degree = F.k;
  const int kf = F.k, dim = kf * t->rank();

  // basis element (slot s, j) is (field basis b_j) * h_s, encoded at s*kf + j
  auto basis_field_elem = [&](int j) {
    std::vector<int> c(kf, 0);
    c[j] = 1;
    return F.from_coeffs(c);
  };
  std::vector<int> constants(static_cast<size_t>(dim) * dim * dim, 0);
  for (int s1 = 0; s1 < t->rank(); ++s1)
    for (int j1 = 0; j1 < kf; ++j1)
      for (int s2 = 0; s2 < t->rank(); ++s2)
        for (int j2 = 0; j2 < kf; ++j2) {
          auto [g, r] = t->mul_pure(t->group_elem(s1), basis_field_elem(j1), t->group_elem(s2),
                                    basis_field_elem(j2));
          auto cf = F.coeffs(r);
          int i = s1 * kf + j1, j = s2 * kf + j2, slot = t->slot_of[g];
          for (int m = 0; m < kf; ++m)
            constants[(static_cast<size_t>(i) * dim + j) * dim + slot * kf + m] = cf[m];
        }
  std::vector<int> unit(dim, 0);
  {
    auto cf = F.coeffs(ring.one);
    int slot = t->slot_of[t->base->group->identity];
    for (int m = 0; m < kf; ++m) unit[slot * kf + m] = cf[m];
  }
  out.algebra = make_structure_algebra(out.prime, dim, std::move(constants), std::move(unit),
                                       t->label + "/GF(" + std::to_string(F.p) + ")");
  return out;
}

std::vector<int> TGRAlgebra::to_coords(const TwistedGroupRing::Elem& a) const {
  const auto& F = *ring->base->ring->field;
  std::vector<int> out(field_degree * ring->rank());
  for (int s = 0; s < ring->rank(); ++s) {
    auto cf = F.coeffs(a[s]);
    for (int j = 0; j < field_degree; ++j) out[s * field_degree + j] = cf[j];
  }
  return out;
}

TwistedGroupRing::Elem TGRAlgebra::from_coords(const std::vector<int>& coords) const {
  const auto& F = *ring->base->ring->field;
  auto out = ring->zero();
  for (int s = 0; s < ring->rank(); ++s) {
    std::vector<int> cf(field_degree);
    for (int j = 0; j < field_degree; ++j) cf[j] = coords[s * field_degree + j];
    out[s] = F.from_coeffs(cf);
  }
  return out;
}

AlgebraHom make_algebra_hom(AlgebraPtr src, AlgebraPtr dst, Matrix map, std::string label) {
  if (map.rows != dst->dim || map.cols != src->dim)
    throw validation_error("algebra hom matrix has the wrong shape");
  // unit
  if (map.apply(src->unit) != dst->unit)
    throw check_error("algebra hom does not preserve the unit: " + label);
  // multiplicativity on basis pairs
  std::vector<std::vector<int>> columns(src->dim);
  for (int j = 0; j < src->dim; ++j) {
    std::vector<int> e(src->dim, 0);
    e[j] = 1;
    columns[j] = map.apply(e);
  }
  for (int i = 0; i < src->dim; ++i)
    for (int j = 0; j < src->dim; ++j) {
      auto lhs = map.apply(src->basis_product(i, j));
      auto rhs = dst->mul(columns[i], columns[j]);
      if (lhs != rhs)
        throw check_error("algebra hom is not multiplicative at basis pair (" +
                          std::to_string(i) + ", " + std::to_string(j) + "): " + label);
    }
  return AlgebraHom{std::move(src), std::move(dst), std::move(map), std::move(label)};
}

AlgebraHom transport_hom(const TGRHom& f, const TGRAlgebra& a, const TGRAlgebra& b) {
  if (f.src.get() != a.ring.get() || f.dst.get() != b.ring.get())
    throw validation_error("transport_hom endpoints do not match the hom");
  const auto& F = *a.ring->base->ring->field;
  const int kf = a.field_degree;
  Matrix map(a.prime, b.algebra->dim, a.algebra->dim);
  for (int s = 0; s < a.ring->rank(); ++s)
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = b.to_coords(f.pure_images[s][F.from_coeffs(c)]);
      for (int i = 0; i < b.algebra->dim; ++i) map.at(i, s * kf + j) = img[i];
    }
  // the hom was verified exhaustively on pure pairs; re-check basis pairs at
  // the algebra level (cheap because images of basis elements stay pure)
  if (map.apply(a.algebra->unit) != b.algebra->unit)
    throw check_error("transported hom does not preserve the unit: " + f.label);
  for (int i = 0; i < a.algebra->dim; ++i)
    for (int j = 0; j < a.algebra->dim; ++j) {
      int s1 = i / kf, j1 = i % kf, s2 = j / kf, j2 = j % kf;
      std::vector<int> c1(kf, 0), c2(kf, 0);
      c1[j1] = 1;
      c2[j2] = 1;
      auto img1 = f.pure_images[s1][F.from_coeffs(c1)];
      auto img2 = f.pure_images[s2][F.from_coeffs(c2)];
      auto rhs = b.to_coords(b.ring->mul(img1, img2));
      auto lhs = map.apply(a.algebra->basis_product(i, j));
      if (lhs != rhs)
        throw check_error("transported hom fails multiplicativity at basis pair (" +
                          std::to_string(i) + ", " + std::to_string(j) + "): " + f.label);
    }
  return AlgebraHom{a.algebra, b.algebra, std::move(map), f.label};
}

namespace {

/// Greedy R^H-basis of R with unique coordinates; throws unsupported_error
/// when R is not free over R^H.
std::vector<int> free_basis_over_fixed(const FiniteRing& ring, const FixedSubring& fixed,
                                       std::vector<std::vector<int>>* coords_out) {
  const int n = ring.size;
  const int fs = static_cast<int>(fixed.to_parent.size());
  const int zero_local = fixed.from_parent[ring.zero];
  std::vector<int> basis;
  std::vector<std::vector<int>> coords(n); // local R^H indices, length = |basis|
  std::vector<char> reached(n, 0);
  reached[ring.zero] = 1;
  std::vector<int> span{ring.zero};
  for (int r = 0; r < n; ++r) {
    if (reached[r]) continue;
    basis.push_back(r);
    for (auto& c : coords) c.resize(basis.size(), zero_local);
    coords[ring.zero].assign(basis.size(), zero_local);
    std::vector<int> snapshot = span;
    for (int old : snapshot)
      for (int si = 0; si < fs; ++si) {
        int cand = ring.plus(old, ring.times(fixed.to_parent[si], r));
        std::vector<int> c = coords[old];
        c.back() = si;
        if (reached[cand]) {
          if (coords[cand] != c && !(cand == old && si == zero_local))
            throw unsupported_error("base ring is not free over the fixed subring " +
                                    fixed.ring->label);
        } else {
          reached[cand] = 1;
          coords[cand] = std::move(c);
          span.push_back(cand);
        }
      }
  }
  long long expected = 1;
  for (size_t i = 0; i < basis.size(); ++i) expected *= fs;
  if (expected != n)
    throw unsupported_error("base ring is not free over the fixed subring " + fixed.ring->label);
  if (coords_out) *coords_out = std::move(coords);
  return basis;
}

} // namespace

std::vector<std::vector<int>> AuslanderMap::matrix_over_fixed(
    const std::vector<int>& endo) const {
  const auto& r = *ring->ring;
  const int m = static_cast<int>(module_basis.size());
  // recompute coordinates via the free-basis span (images of basis elements)
  std::vector<std::vector<int>> coords;
  free_basis_over_fixed(r, fixed, &coords);
  std::vector<std::vector<int>> out(m, std::vector<int>(m));
  for (int j = 0; j < m; ++j) {
    const auto& c = coords[endo[module_basis[j]]];
    for (int i = 0; i < m; ++i) out[i][j] = c[i];
  }
  return out;
}

AuslanderMap auslander_map(const GRingPtr& r, const Subgroup& h) {
  AuslanderMap out;
  out.ring = r;
  out.h = h;
  out.fixed = fixed_subring(r, h);
  out.module_basis = free_basis_over_fixed(*r->ring, out.fixed, nullptr);

  const auto& ring = *r->ring;
  const int n = ring.size;
  out.pure_endos.assign(h.order(), std::vector<std::vector<int>>(n));
  for (int s = 0; s < h.order(); ++s) {
    int g = h.elements[s];
    for (int coeff = 0; coeff < n; ++coeff) {
      std::vector<int> table(n);
      for (int t = 0; t < n; ++t) table[t] = ring.times(coeff, r->act(g, t));
      out.pure_endos[s][coeff] = std::move(table);
    }
  }
  // additivity of each image and multiplicativity on pure pairs
  for (int s = 0; s < h.order(); ++s)
    for (int coeff = 0; coeff < n; ++coeff) {
      const auto& tab = out.pure_endos[s][coeff];
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (tab[ring.plus(x, y)] != ring.plus(tab[x], tab[y]))
            throw check_error("Auslander image is not additive");
    }
  std::vector<int> hslot(r->group->order, -1);
  for (int s = 0; s < h.order(); ++s) hslot[h.elements[s]] = s;
  for (int s1 = 0; s1 < h.order(); ++s1)
    for (int c1 = 0; c1 < n; ++c1)
      for (int s2 = 0; s2 < h.order(); ++s2)
        for (int c2 = 0; c2 < n; ++c2) {
          // (c1 g1)(c2 g2) = c1 theta_{g1}(c2) g1g2
          int g12 = r->group->mul(h.elements[s1], h.elements[s2]);
          int c12 = ring.times(c1, r->act(h.elements[s1], c2));
          const auto& first_img = out.pure_endos[s1][c1];
          const auto& second_img = out.pure_endos[s2][c2];
          const auto& direct = out.pure_endos[hslot[g12]][c12];
          for (int t = 0; t < n; ++t)
            if (first_img[second_img[t]] != direct[t])
              throw check_error("Auslander map is not multiplicative on pure elements");
        }

  // ranks over GF(p)
  if (!ring.field)
    throw unsupported_error("Auslander verdict requires a finite field base ring");
  const auto& F = *ring.field;
  auto gf = prime_field(F.p);
  const int kf = F.k;
  auto endo_to_flat = [&](const std::vector<int>& table) {
    // additive endo of R as a kf x kf GF(p) matrix, flattened row-major
    std::vector<int> flat(kf * kf);
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = F.coeffs(table[F.from_coeffs(c)]);
      for (int i = 0; i < kf; ++i) flat[i * kf + j] = img[i];
    }
    return flat;
  };
  Matrix span(gf, kf * kf, h.order() * kf);
  for (int s = 0; s < h.order(); ++s)
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto flat = endo_to_flat(out.pure_endos[s][F.from_coeffs(c)]);
      for (int i = 0; i < kf * kf; ++i) span.at(i, s * kf + j) = flat[i];
    }
  out.image_rank = matrix_rank(span);
  out.domain_dim = h.order() * kf;
  out.codomain_dim = static_cast<int>(end_fixed_basis(r, h).size());
  out.isomorphism = out.image_rank == out.domain_dim && out.image_rank == out.codomain_dim;
  return out;
}

std::vector<std::vector<int>> end_fixed_basis(const GRingPtr& r, const Subgroup& h) {
  const auto& ring = *r->ring;
  if (!ring.field) throw unsupported_error("end_fixed_basis requires a finite field base ring");
  const auto& F = *ring.field;
  auto gf = prime_field(F.p);
  const int kf = F.k;
  auto fixed = fixed_subring(r, h);

  // unknowns: kf x kf matrix entries of phi over GF(p), row-major.
  // constraints: phi(s * b_j) = s * phi(b_j) for every s in R^H and basis b_j.
  std::vector<std::vector<int>> rows;
  for (int sl = 0; sl < static_cast<int>(fixed.to_parent.size()); ++sl) {
    int s = fixed.to_parent[sl];
    // multiplication-by-s as a kf x kf matrix M_s
    Matrix ms(gf, kf, kf);
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = F.coeffs(F.mul(s, F.from_coeffs(c)));
      for (int i = 0; i < kf; ++i) ms.at(i, j) = img[i];
    }
    // phi M_s - M_s phi = 0: for each (i, j) one linear row in phi entries
    for (int i = 0; i < kf; ++i)
      for (int j = 0; j < kf; ++j) {
        std::vector<int> row(kf * kf, 0);
        for (int t = 0; t < kf; ++t) {
          // (phi M_s)_{ij} = sum_t phi_{it} (M_s)_{tj}
          row[i * kf + t] = gf->add(row[i * kf + t], ms.at(t, j));
          // (M_s phi)_{ij} = sum_t (M_s)_{it} phi_{tj}
          row[t * kf + j] = gf->sub(row[t * kf + j], ms.at(i, t));
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix sys(gf, static_cast<int>(rows.size()), kf * kf);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < kf * kf; ++j)
      sys.at(static_cast<int>(i), j) = rows[i][j];
  return rref_solve(sys).kernel;
}

} // namespace twmack
