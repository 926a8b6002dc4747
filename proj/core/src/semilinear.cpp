#include "twmack/semilinear.hpp"

#include <algorithm>

#include "twmack/errors.hpp"

namespace twmack {

long long SemilinearModule::carrier_size() const {
  long long n = 1;
  for (int i = 0; i < rank; ++i) n *= base->ring->size;
  return n;
}

std::vector<int> SemilinearModule::coords_of(long long index) const {
  std::vector<int> c(rank);
  for (int i = 0; i < rank; ++i) {
    c[i] = static_cast<int>(index % base->ring->size);
    index /= base->ring->size;
  }
  return c;
}

long long SemilinearModule::index_of(const std::vector<int>& coords) const {
  long long idx = 0;
  for (int i = rank - 1; i >= 0; --i) idx = idx * base->ring->size + coords[i];
  return idx;
}

SemilinearModule make_semilinear(GRingPtr base, Subgroup h, int rank,
                                 std::vector<std::vector<int>> maps) {
  SemilinearModule s;
  s.base = std::move(base);
  s.h = std::move(h);
  s.rank = rank;
  s.maps = std::move(maps);
  const auto& ring = *s.base->ring;
  const long long size = s.carrier_size();
  if (static_cast<int>(s.maps.size()) != s.h.order())
    throw validation_error("semilinear data needs one table per subgroup element");
  for (const auto& t : s.maps) {
    if (static_cast<long long>(t.size()) != size)
      throw validation_error("semilinear table has the wrong carrier size");
    std::vector<char> hit(size, 0);
    for (int v : t) {
      if (v < 0 || v >= size || hit[v]++)
        throw validation_error("semilinear table is not a bijection");
    }
  }

  auto add_elems = [&](long long x, long long y) {
    auto cx = s.coords_of(x), cy = s.coords_of(y);
    for (int i = 0; i < s.rank; ++i) cx[i] = ring.plus(cx[i], cy[i]);
    return s.index_of(cx);
  };
  auto scale_elem = [&](int r, long long x) {
    auto cx = s.coords_of(x);
    for (int i = 0; i < s.rank; ++i) cx[i] = ring.times(r, cx[i]);
    return s.index_of(cx);
  };

  for (int slot = 0; slot < s.h.order(); ++slot) {
    const auto& f = s.maps[slot];
    const int g = s.h.elements[slot];
    // additivity against single-coordinate generators implies full additivity
    for (long long m = 0; m < size; ++m)
      for (int i = 0; i < s.rank; ++i)
        for (int r = 0; r < ring.size; ++r) {
          std::vector<int> gen(s.rank, ring.zero);
          gen[i] = r;
          long long ge = s.index_of(gen);
          if (f[add_elems(m, ge)] != add_elems(f[m], f[ge]))
            throw check_error("semilinear map is not additive at (h=" + std::to_string(g) +
                              ", m=" + std::to_string(m) + ", m'=" + std::to_string(ge) + ")");
        }
    for (long long m = 0; m < size; ++m)
      for (int r = 0; r < ring.size; ++r)
        if (f[scale_elem(r, m)] != scale_elem(s.base->act(g, r), f[m]))
          throw check_error("semilinearity fails at (h=" + std::to_string(g) + ", r=" +
                            std::to_string(r) + ", m=" + std::to_string(m) + ")");
  }
  // cocycle f(gh) = f(g) f(h)
  std::vector<int> slot_of(s.base->group->order, -1);
  for (int i = 0; i < s.h.order(); ++i) slot_of[s.h.elements[i]] = i;
  if (slot_of[s.base->group->identity] < 0)
    throw validation_error("semilinear subgroup misses the identity");
  for (long long m = 0; m < size; ++m)
    if (s.maps[slot_of[s.base->group->identity]][m] != m)
      throw check_error("semilinear map at the identity is not the identity");
  for (int s1 = 0; s1 < s.h.order(); ++s1)
    for (int s2 = 0; s2 < s.h.order(); ++s2) {
      int prod = slot_of[s.base->group->mul(s.h.elements[s1], s.h.elements[s2])];
      for (long long m = 0; m < size; ++m)
        if (s.maps[s1][s.maps[s2][m]] != s.maps[prod][m])
          throw check_error("cocycle condition fails at (g=" + std::to_string(s.h.elements[s1]) +
                            ", h=" + std::to_string(s.h.elements[s2]) +
                            ", m=" + std::to_string(m) + ")");
    }
  return s;
}

SemilinearModule semilinear_from_matrices(GRingPtr base, Subgroup h, int rank,
                                          const std::vector<std::vector<std::vector<int>>>& mats) {
  const auto& ring = *base->ring;
  SemilinearModule probe;
  probe.base = base;
  probe.h = h;
  probe.rank = rank;
  const long long size = probe.carrier_size();
  std::vector<std::vector<int>> maps(h.order(), std::vector<int>(size));
  for (int slot = 0; slot < h.order(); ++slot) {
    const auto& a = mats[slot];
    int g = h.elements[slot];
    for (long long m = 0; m < size; ++m) {
      auto c = probe.coords_of(m);
      for (int& v : c) v = base->act(g, v);
      std::vector<int> img(rank, ring.zero);
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          img[i] = ring.plus(img[i], ring.times(a[i][j], c[j]));
      maps[slot][m] = probe.index_of(img);
    }
  }
  return make_semilinear(std::move(base), std::move(h), rank, std::move(maps));
}

AlgebraModule semilinear_to_module(const SemilinearModule& s, const TGRAlgebra& alg) {
  if (alg.ring->base.get() != s.base.get() || alg.ring->sub != s.h)
    throw validation_error("semilinear data does not match the twisted ring");
  const auto& F = *s.base->ring->field;
  const int kf = alg.field_degree;
  const int dim = s.rank * kf;

  auto field_basis = [&](int j) {
    std::vector<int> c(kf, 0);
    c[j] = 1;
    return F.from_coeffs(c);
  };
  // carrier basis vector (i, j) = e_i * b_j as an element of the carrier
  auto basis_elem = [&](int i, int j) {
    std::vector<int> c(s.rank, F.zero());
    c[i] = field_basis(j);
    return s.index_of(c);
  };
  auto to_gf_coords = [&](long long m) {
    auto c = s.coords_of(m);
    std::vector<int> out(dim);
    for (int i = 0; i < s.rank; ++i) {
      auto cf = F.coeffs(c[i]);
      for (int j = 0; j < kf; ++j) out[i * kf + j] = cf[j];
    }
    return out;
  };

  std::vector<Matrix> action(alg.algebra->dim, Matrix(alg.prime, dim, dim));
  for (int slot = 0; slot < s.h.order(); ++slot)
    for (int jt = 0; jt < kf; ++jt) {
      Matrix& mat = action[slot * kf + jt];
      int scalar = field_basis(jt);
      for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < kf; ++j) {
          long long img = s.maps[slot][basis_elem(i, j)];
          auto c = s.coords_of(img);
          for (int& v : c) v = F.mul(scalar, v);
          auto col = to_gf_coords(s.index_of(c));
          for (int rr = 0; rr < dim; ++rr) mat.at(rr, i * kf + j) = col[rr];
        }
    }
  return make_module(alg.algebra, std::move(action));
}

SemilinearModule semilinear_from_module(const AlgebraModule& m, const TGRAlgebra& alg) {
  if (m.algebra.get() != alg.algebra.get())
    throw validation_error("module is not over the given twisted-ring algebra");
  const auto& F = *alg.ring->base->ring->field;
  const auto& ring = *alg.ring->base->ring;
  const int kf = alg.field_degree;
  if (m.dim % kf != 0)
    throw check_error("module dimension is not divisible by the field degree");
  const int rank = m.dim / kf;

  // action matrices of the pure scalars r*e
  std::vector<Matrix> scalar_act(ring.size, Matrix(alg.prime, m.dim, m.dim));
  for (int r = 0; r < ring.size; ++r)
    scalar_act[r] = m.act(alg.to_coords(alg.ring->pure(alg.ring->base->group->identity, r)));

  // greedy R-basis of the carrier
  std::vector<std::vector<int>> basis_vectors;
  Matrix span(alg.prime, m.dim, 0);
  auto in_span = [&](const std::vector<int>& v) {
    if (span.cols == 0) {
      for (int x : v)
        if (x != 0) return false;
      return true;
    }
    Matrix b(alg.prime, m.dim, 1);
    for (int i = 0; i < m.dim; ++i) b.at(i, 0) = v[i];
    return rref_solve(span, &b).consistent;
  };
  for (int cand = 0; cand < m.dim && static_cast<int>(basis_vectors.size()) < rank; ++cand) {
    std::vector<int> v(m.dim, 0);
    v[cand] = 1;
    if (in_span(v)) continue;
    basis_vectors.push_back(v);
    // extend the span by b_j * v for all field basis b_j
    Matrix wider(alg.prime, m.dim, span.cols + kf);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < span.cols; ++j) wider.at(i, j) = span.at(i, j);
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = scalar_act[F.from_coeffs(c)].apply(v);
      for (int i = 0; i < m.dim; ++i) wider.at(i, span.cols + j) = img[i];
    }
    span = std::move(wider);
  }
  if (static_cast<int>(basis_vectors.size()) != rank || matrix_rank(span) != m.dim)
    throw check_error("could not extract a free R-basis from the module carrier");

  // V: columns (i, j) = b_j * v_i
  Matrix v_mat(alg.prime, m.dim, m.dim);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = scalar_act[F.from_coeffs(c)].apply(basis_vectors[i]);
      for (int rr = 0; rr < m.dim; ++rr) v_mat.at(rr, i * kf + j) = img[rr];
    }
  Matrix v_inv = matrix_inverse(v_mat);

  SemilinearModule out;
  out.base = alg.ring->base;
  out.h = alg.ring->sub;
  out.rank = rank;
  const long long size = out.carrier_size();

  auto concrete = [&](long long idx) {
    auto c = out.coords_of(idx);
    std::vector<int> v(m.dim, 0);
    const auto& gf = *alg.prime;
    for (int i = 0; i < rank; ++i) {
      if (c[i] == ring.zero) continue;
      auto img = scalar_act[c[i]].apply(basis_vectors[i]);
      for (int rr = 0; rr < m.dim; ++rr) v[rr] = gf.add(v[rr], img[rr]);
    }
    return v;
  };
  auto abstract = [&](const std::vector<int>& v) {
    auto coords = v_inv.apply(v); // (i, j) coordinates
    std::vector<int> c(rank);
    for (int i = 0; i < rank; ++i) {
      std::vector<int> cf(kf);
      for (int j = 0; j < kf; ++j) cf[j] = coords[i * kf + j];
      c[i] = F.from_coeffs(cf);
    }
    return out.index_of(c);
  };

  out.maps.assign(out.h.order(), std::vector<int>(size));
  for (int slot = 0; slot < out.h.order(); ++slot) {
    auto mat = m.act(alg.to_coords(alg.ring->pure(out.h.elements[slot], ring.one)));
    for (long long idx = 0; idx < size; ++idx)
      out.maps[slot][idx] = static_cast<int>(abstract(mat.apply(concrete(idx))));
  }
  return make_semilinear(out.base, out.h, out.rank, std::move(out.maps));
}

} // namespace twmack
