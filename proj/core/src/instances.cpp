#include "twmack/instances.hpp"

#include <algorithm>
#include <map>

#include "twmack/errors.hpp"
#include "twmack/module.hpp"

namespace twmack {

namespace {

/// Conjugacy classes of the subgroups of lattice member hi, under conjugation
/// by elements of that subgroup. reps are lattice indices, sorted canonically.
struct LocalClasses {
  std::vector<int> reps;
  std::map<int, int> class_of; // lattice index -> local class
};

LocalClasses local_classes(const SubgroupLattice& lat, int hi) {
  LocalClasses out;
  const auto& h = lat.subgroups[hi];
  auto members = lat.contained_in(hi);
  std::vector<char> assigned(lat.size(), 0);
  for (int li : members) {
    if (assigned[li]) continue;
    // orbit of li under conjugation by elements of h; representative = lex-min member
    std::vector<int> orbit;
    for (int a : h.elements) {
      int img = lat.index_of(conjugate_subgroup(a, lat.subgroups[li]));
      if (!assigned[img]) {
        assigned[img] = 1;
        orbit.push_back(img);
      }
    }
    int rep = *std::min_element(orbit.begin(), orbit.end(), [&](int x, int y) {
      return lat.subgroups[x].elements < lat.subgroups[y].elements;
    });
    int cls = static_cast<int>(out.reps.size());
    out.reps.push_back(rep);
    for (int member : orbit) out.class_of[member] = cls;
  }
  // canonical order: by (order, elements) of the representative
  std::vector<int> perm(out.reps.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& sa = lat.subgroups[out.reps[a]];
    const auto& sb = lat.subgroups[out.reps[b]];
    if (sa.order() != sb.order()) return sa.order() < sb.order();
    return sa.elements < sb.elements;
  });
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  std::vector<int> new_reps(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) new_reps[i] = out.reps[perm[i]];
  out.reps = std::move(new_reps);
  for (auto& [li, cls] : out.class_of) cls = inv[cls];
  return out;
}

} // namespace

MackeyData burnside_mackey(const GroupPtr& g) {
  MackeyData m;
  m.group = g;
  m.lattice = build_lattice(g, g->order);
  m.label = "Burnside(" + g->label + ")";
  const auto& lat = m.lattice;

  std::vector<LocalClasses> classes(lat.size());
  for (int hi = 0; hi < lat.size(); ++hi) {
    classes[hi] = local_classes(lat, hi);
    m.values.push_back(AbValue::free_value(static_cast<int>(classes[hi].reps.size()),
                                           "A(H" + std::to_string(hi) + ")"));
  }

  for (int ki = 0; ki < lat.size(); ++ki)
    for (int hi : lat.contained_in(ki)) {
      const auto& h = lat.subgroups[hi];
      const auto& k = lat.subgroups[ki];
      // res: [K/L] restricted to H decomposes along H\K/L
      IntMat res(static_cast<int>(classes[hi].reps.size()),
                 static_cast<int>(classes[ki].reps.size()));
      for (size_t col = 0; col < classes[ki].reps.size(); ++col) {
        const auto& l = lat.subgroups[classes[ki].reps[col]];
        for (const auto& dc : double_coset_reps(h, l, k)) {
          Subgroup stab = intersect_subgroups(h, conjugate_subgroup(dc.rep, l));
          res.at(classes[hi].class_of.at(lat.index_of(stab)), static_cast<int>(col)) += 1;
        }
      }
      m.res[{hi, ki}] = AbMap::from_matrix(m.values[ki], m.values[hi], std::move(res));

      // tr: [H/L] -> [K/L]
      IntMat tr(static_cast<int>(classes[ki].reps.size()),
                static_cast<int>(classes[hi].reps.size()));
      for (size_t col = 0; col < classes[hi].reps.size(); ++col)
        tr.at(classes[ki].class_of.at(classes[hi].reps[col]), static_cast<int>(col)) += 1;
      m.tr[{hi, ki}] = AbMap::from_matrix(m.values[hi], m.values[ki], std::move(tr));
    }

  m.conj.assign(g->order, std::vector<AbMap>());
  for (int x = 0; x < g->order; ++x) {
    m.conj[x].reserve(lat.size());
    for (int hi = 0; hi < lat.size(); ++hi) {
      int hgi = lat.conj_index(x, hi);
      IntMat c(static_cast<int>(classes[hgi].reps.size()),
               static_cast<int>(classes[hi].reps.size()));
      for (size_t col = 0; col < classes[hi].reps.size(); ++col) {
        int img = lat.index_of(conjugate_subgroup(x, lat.subgroups[classes[hi].reps[col]]));
        c.at(classes[hgi].class_of.at(img), static_cast<int>(col)) += 1;
      }
      m.conj[x].push_back(AbMap::from_matrix(m.values[hi], m.values[hgi], std::move(c)));
    }
  }
  return m;
}

MackeyData k0_twisted_mackey(TwistedContext& ctx) {
  MackeyData m;
  m.group = ctx.ring->group;
  m.lattice = build_lattice(m.group, m.group->order);
  m.label = "K0(" + ctx.ring->label + ")";
  const auto& lat = m.lattice;

  for (int hi = 0; hi < lat.size(); ++hi)
    m.values.push_back(AbValue::free_value(ctx.k0(lat.subgroups[hi]).rank(),
                                           "K0(R_theta[H" + std::to_string(hi) + "])"));

  auto right_basis_for = [&](const Subgroup& small, const Subgroup& big) {
    const auto& alg_big = ctx.algebra(big);
    std::vector<std::vector<int>> basis;
    for (int z : left_coset_reps(small, big))
      basis.push_back(alg_big.to_coords(alg_big.ring->pure(z, ctx.ring->ring->one)));
    return basis;
  };

  for (int ki = 0; ki < lat.size(); ++ki)
    for (int hi : lat.contained_in(ki)) {
      const auto& hsub = lat.subgroups[hi];
      const auto& ksub = lat.subgroups[ki];
      auto hom = transport_hom(rho_hom(ctx.twisted(hsub), ctx.twisted(ksub)), ctx.algebra(hsub),
                               ctx.algebra(ksub));
      auto rb = right_basis_for(hsub, ksub);
      IntMat trm = k0_induced_map(hom, ScalarKind::Extend, ctx.k0(hsub), ctx.k0(ksub), &rb);
      IntMat resm = k0_induced_map(hom, ScalarKind::Restrict, ctx.k0(hsub), ctx.k0(ksub));
      m.tr[{hi, ki}] = AbMap::from_matrix(m.values[hi], m.values[ki], std::move(trm));
      m.res[{hi, ki}] = AbMap::from_matrix(m.values[ki], m.values[hi], std::move(resm));
    }

  m.conj.assign(m.group->order, std::vector<AbMap>());
  for (int x = 0; x < m.group->order; ++x)
    for (int hi = 0; hi < lat.size(); ++hi) {
      int hgi = lat.conj_index(x, hi);
      const auto& hsub = lat.subgroups[hi];
      const auto& gsub = lat.subgroups[hgi];
      auto hom = transport_hom(gamma_hom(ctx.twisted(hsub), x, ctx.twisted(gsub)),
                               ctx.algebra(hsub), ctx.algebra(gsub));
      std::vector<std::vector<int>> rb{ctx.algebra(gsub).algebra->unit};
      IntMat cm = k0_induced_map(hom, ScalarKind::Extend, ctx.k0(hsub), ctx.k0(gsub), &rb);
      m.conj[x].push_back(AbMap::from_matrix(m.values[hi], m.values[hgi], std::move(cm)));
    }
  return m;
}

MackeyData units_galois_mackey(int p, int k) {
  auto field = FiniteField::make(p, k);
  auto gring = frobenius_gring(field, cyclic_group(k));
  MackeyData m;
  m.group = gring->group;
  m.lattice = build_lattice(m.group, m.group->order);
  m.label = "Units(GF(" + std::to_string(field->size()) + ")/GF(" + std::to_string(p) + "))";
  const auto& lat = m.lattice;

  // per subgroup: the unit group of the fixed field, as an explicit table
  std::vector<std::vector<int>> units(lat.size()); // local index -> field element
  std::vector<std::vector<int>> unit_index(lat.size(), std::vector<int>(field->size(), -1));
  for (int hi = 0; hi < lat.size(); ++hi) {
    auto fixed = fixed_subring(gring, lat.subgroups[hi]);
    for (int x : fixed.to_parent) {
      if (x == 0) continue;
      unit_index[hi][x] = static_cast<int>(units[hi].size());
      units[hi].push_back(x);
    }
    const int n = static_cast<int>(units[hi].size());
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        add[a][b] = unit_index[hi][field->mul(units[hi][a], units[hi][b])];
    m.values.push_back(AbValue::finite_value(
        make_finite_ab(std::move(add), "(L^H" + std::to_string(hi) + ")^x")));
  }

  for (int ki = 0; ki < lat.size(); ++ki)
    for (int hi : lat.contained_in(ki)) {
      // res: inclusion of the bigger subgroup's (smaller field's) units
      std::vector<int> inc(units[ki].size());
      for (size_t a = 0; a < units[ki].size(); ++a) inc[a] = unit_index[hi][units[ki][a]];
      m.res[{hi, ki}] = AbMap::from_table(m.values[ki], m.values[hi], std::move(inc));
      // tr: the norm over the coset representatives of K/H
      auto reps = left_coset_reps(lat.subgroups[hi], lat.subgroups[ki]);
      std::vector<int> norm(units[hi].size());
      for (size_t a = 0; a < units[hi].size(); ++a) {
        int prod = field->one();
        for (int z : reps) prod = field->mul(prod, gring->act(z, units[hi][a]));
        norm[a] = unit_index[ki][prod];
        if (norm[a] < 0) throw check_error("norm left the fixed subfield");
      }
      m.tr[{hi, ki}] = AbMap::from_table(m.values[hi], m.values[ki], std::move(norm));
    }

  m.conj.assign(m.group->order, std::vector<AbMap>());
  for (int x = 0; x < m.group->order; ++x)
    for (int hi = 0; hi < lat.size(); ++hi) {
      int hgi = lat.conj_index(x, hi);
      std::vector<int> tab(units[hi].size());
      for (size_t a = 0; a < units[hi].size(); ++a) {
        tab[a] = unit_index[hgi][gring->act(x, units[hi][a])];
        if (tab[a] < 0) throw check_error("Galois action left the fixed subfield");
      }
      m.conj[x].push_back(AbMap::from_table(m.values[hi], m.values[hgi], std::move(tab)));
    }
  return m;
}

EndoMackeyResult endomorphism_mackey(TwistedContext& ctx) {
  const auto& r = ctx.ring;
  const auto& ring = *r->ring;
  if (!ring.field) throw unsupported_error("endomorphism instance needs a finite field base");
  const auto& F = *ring.field;
  const int kf = F.k;
  auto lat = build_lattice(r->group, r->group->order);

  EndoMackeyResult out;
  out.data.group = r->group;
  out.data.lattice = lat;
  out.data.label = "K0(End(" + r->label + "))";
  out.squares_commute = true;

  // comparison maps and their verdicts, per subgroup
  std::vector<AuslanderMap> aus;
  aus.reserve(lat.size());
  for (int hi = 0; hi < lat.size(); ++hi) {
    aus.push_back(auslander_map(r, lat.subgroups[hi]));
    if (!aus.back().isomorphism)
      throw unsupported_error("comparison map is not an isomorphism at subgroup " +
                              std::to_string(hi));
  }

  auto gf = FiniteField::make(F.p, 1);
  // multiplication matrices for theta_g over GF(p)
  auto theta_matrix = [&](int g) {
    Matrix mt(gf, kf, kf);
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = F.coeffs(r->act(g, F.from_coeffs(c)));
      for (int i = 0; i < kf; ++i) mt.at(i, j) = img[i];
    }
    return mt;
  };
  // flatten an endo table on R to a kf x kf GF(p) matrix, row-major
  auto table_to_matrix = [&](const std::vector<int>& table) {
    Matrix mt(gf, kf, kf);
    for (int j = 0; j < kf; ++j) {
      std::vector<int> c(kf, 0);
      c[j] = 1;
      auto img = F.coeffs(table[F.from_coeffs(c)]);
      for (int i = 0; i < kf; ++i) mt.at(i, j) = img[i];
    }
    return mt;
  };

  // End_{R^H}(R) as a structure algebra, with its flat basis matrix
  struct EndAlgebra {
    AlgebraPtr algebra;
    std::vector<std::vector<int>> basis; // flat kf^2 vectors
    Matrix basis_matrix;                 // kf^2 x dim
  };
  std::vector<EndAlgebra> ends(lat.size());
  for (int hi = 0; hi < lat.size(); ++hi) {
    auto basis = end_fixed_basis(r, lat.subgroups[hi]);
    const int dim = static_cast<int>(basis.size());
    Matrix u(gf, kf * kf, dim);
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < kf * kf; ++i) u.at(i, j) = basis[j][i];
    auto mat_of = [&](const std::vector<int>& flat) {
      Matrix mm(gf, kf, kf);
      for (int i = 0; i < kf; ++i)
        for (int j = 0; j < kf; ++j) mm.at(i, j) = flat[i * kf + j];
      return mm;
    };
    std::vector<int> constants(static_cast<size_t>(dim) * dim * dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        auto prod = mat_of(basis[i]).mul(mat_of(basis[j]));
        std::vector<int> flat(kf * kf);
        for (int a = 0; a < kf; ++a)
          for (int b = 0; b < kf; ++b) flat[a * kf + b] = prod.at(a, b);
        auto coords = coordinates_in_basis(u, flat);
        for (int t = 0; t < dim; ++t)
          constants[(static_cast<size_t>(i) * dim + j) * dim + t] = coords[t];
      }
    std::vector<int> idflat(kf * kf, 0);
    for (int i = 0; i < kf; ++i) idflat[i * kf + i] = 1;
    auto unit_coords = coordinates_in_basis(u, idflat);
    ends[hi] = EndAlgebra{make_structure_algebra(gf, dim, std::move(constants),
                                                 std::move(unit_coords),
                                                 "End_H" + std::to_string(hi)),
                          std::move(basis), std::move(u)};
  }

  std::vector<AlgebraK0> k0s;
  k0s.reserve(lat.size());
  for (int hi = 0; hi < lat.size(); ++hi) {
    k0s.push_back(algebra_k0(ends[hi].algebra));
    out.data.values.push_back(AbValue::free_value(k0s[hi].rank(),
                                                  "K0(End_H" + std::to_string(hi) + ")"));
  }

  auto endo_coords = [&](int hi, const std::vector<int>& table) {
    auto mt = table_to_matrix(table);
    std::vector<int> flat(kf * kf);
    for (int i = 0; i < kf; ++i)
      for (int j = 0; j < kf; ++j) flat[i * kf + j] = mt.at(i, j);
    return coordinates_in_basis(ends[hi].basis_matrix, flat);
  };

  // the comparison squares, elementwise on pure rg
  auto check_squares = [&](int hi, int ki) {
    const auto& h = lat.subgroups[hi];
    for (int s = 0; s < h.order(); ++s)
      for (int c = 0; c < ring.size; ++c) {
        const auto& via_h = aus[hi].pure_endos[s][c];
        // image of the same pure element computed inside the bigger subgroup
        int slot_k = -1;
        const auto& ksub = lat.subgroups[ki];
        for (int t = 0; t < ksub.order(); ++t)
          if (ksub.elements[t] == h.elements[s]) slot_k = t;
        const auto& via_k = aus[ki].pure_endos[slot_k][c];
        if (via_h != via_k) {
          out.squares_commute = false;
          out.detail = "inclusion square fails at subgroup " + std::to_string(hi);
          return;
        }
      }
  };
  for (int ki = 0; ki < lat.size() && out.squares_commute; ++ki)
    for (int hi : lat.contained_in(ki)) {
      check_squares(hi, ki);
      if (!out.squares_commute) break;
    }
  // conjugation square: A_{gH}(gamma^g(ra)) = theta_g o A_H(ra) o theta_{g^{-1}}
  for (int x = 0; x < r->group->order && out.squares_commute; ++x)
    for (int hi = 0; hi < lat.size() && out.squares_commute; ++hi) {
      int hgi = lat.conj_index(x, hi);
      const auto& h = lat.subgroups[hi];
      const auto& hg = lat.subgroups[hgi];
      for (int s = 0; s < h.order() && out.squares_commute; ++s)
        for (int c = 0; c < ring.size; ++c) {
          // gamma^x(c * h_s) = theta_x(c) * x h_s x^{-1}
          int gelt = r->group->conj(x, h.elements[s]);
          int slot_g = -1;
          for (int t = 0; t < hg.order(); ++t)
            if (hg.elements[t] == gelt) slot_g = t;
          const auto& lhs = aus[hgi].pure_endos[slot_g][r->act(x, c)];
          const auto& base = aus[hi].pure_endos[s][c];
          bool same = true;
          for (int t = 0; t < ring.size && same; ++t)
            same = lhs[t] == r->act(x, base[r->act(r->group->inv(x), t)]);
          if (!same) {
            out.squares_commute = false;
            out.detail = "conjugation square fails at subgroup " + std::to_string(hi) +
                         ", g=" + std::to_string(x);
            break;
          }
        }
    }

  // maps on the endomorphism side; right bases transported through the
  // comparison isomorphisms
  for (int ki = 0; ki < lat.size(); ++ki)
    for (int hi : lat.contained_in(ki)) {
      const int dh = ends[hi].algebra->dim, dk = ends[ki].algebra->dim;
      Matrix inc(gf, dk, dh);
      for (int j = 0; j < dh; ++j) {
        auto coords = coordinates_in_basis(ends[ki].basis_matrix, ends[hi].basis[j]);
        for (int i = 0; i < dk; ++i) inc.at(i, j) = coords[i];
      }
      auto hom = make_algebra_hom(ends[hi].algebra, ends[ki].algebra, std::move(inc),
                                  "End incl");
      std::vector<std::vector<int>> rb;
      for (int z : left_coset_reps(lat.subgroups[hi], lat.subgroups[ki])) {
        std::vector<int> table(ring.size);
        for (int t = 0; t < ring.size; ++t) table[t] = r->act(z, t); // A_K(1 * z)
        rb.push_back(endo_coords(ki, table));
      }
      IntMat trm = k0_induced_map(hom, ScalarKind::Extend, k0s[hi], k0s[ki], &rb);
      IntMat resm = k0_induced_map(hom, ScalarKind::Restrict, k0s[hi], k0s[ki]);
      out.data.tr[{hi, ki}] =
          AbMap::from_matrix(out.data.values[hi], out.data.values[ki], std::move(trm));
      out.data.res[{hi, ki}] =
          AbMap::from_matrix(out.data.values[ki], out.data.values[hi], std::move(resm));
    }

  out.data.conj.assign(r->group->order, std::vector<AbMap>());
  for (int x = 0; x < r->group->order; ++x)
    for (int hi = 0; hi < lat.size(); ++hi) {
      int hgi = lat.conj_index(x, hi);
      const int dh = ends[hi].algebra->dim, dg = ends[hgi].algebra->dim;
      Matrix cm(gf, dg, dh);
      auto mtg = theta_matrix(x);
      auto mtgi = theta_matrix(r->group->inv(x));
      for (int j = 0; j < dh; ++j) {
        Matrix phi(gf, kf, kf);
        for (int a = 0; a < kf; ++a)
          for (int b = 0; b < kf; ++b) phi.at(a, b) = ends[hi].basis[j][a * kf + b];
        auto img = mtg.mul(phi).mul(mtgi);
        std::vector<int> flat(kf * kf);
        for (int a = 0; a < kf; ++a)
          for (int b = 0; b < kf; ++b) flat[a * kf + b] = img.at(a, b);
        auto coords = coordinates_in_basis(ends[hgi].basis_matrix, flat);
        for (int i = 0; i < dg; ++i) cm.at(i, j) = coords[i];
      }
      auto hom = make_algebra_hom(ends[hi].algebra, ends[hgi].algebra, std::move(cm),
                                  "End conj");
      std::vector<std::vector<int>> rb{ends[hgi].algebra->unit};
      IntMat mat = k0_induced_map(hom, ScalarKind::Extend, k0s[hi], k0s[hgi], &rb);
      out.data.conj[x].push_back(
          AbMap::from_matrix(out.data.values[hi], out.data.values[hgi], std::move(mat)));
    }
  return out;
}

DressKukuReport dress_kuku_compare(TwistedContext& ctx) {
  const auto& r = ctx.ring;
  for (int g = 0; g < r->group->order; ++g)
    for (int x = 0; x < r->ring->size; ++x)
      if (r->act(g, x) != x)
        throw validation_error("the trivial-action comparison needs a trivial action");
  if (!r->ring->field || r->ring->field->k != 1)
    throw unsupported_error("the untwisted comparison pipeline works over prime fields");
  const auto& F = r->ring->field;

  DressKukuReport out;
  out.twisted = k0_twisted_mackey(ctx);
  const auto& lat = out.twisted.lattice;

  // untwisted group-ring pipeline, built directly from the group table
  auto group_ring = [&](const Subgroup& h) {
    const int dim = h.order();
    std::vector<int> slot(r->group->order, -1);
    for (int s = 0; s < dim; ++s) slot[h.elements[s]] = s;
    std::vector<int> constants(static_cast<size_t>(dim) * dim * dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        constants[(static_cast<size_t>(i) * dim + j) * dim +
                  slot[r->group->mul(h.elements[i], h.elements[j])]] = 1;
    std::vector<int> unit(dim, 0);
    unit[slot[r->group->identity]] = 1;
    return make_structure_algebra(F, dim, std::move(constants), std::move(unit),
                                  "F[H" + std::to_string(h.order()) + "]");
  };

  MackeyData& u = out.untwisted;
  u.group = r->group;
  u.lattice = lat;
  u.label = "K0(" + F->label + "[G]) untwisted";
  std::vector<AlgebraPtr> algs;
  std::vector<AlgebraK0> k0s;
  for (int hi = 0; hi < lat.size(); ++hi) {
    algs.push_back(group_ring(lat.subgroups[hi]));
    k0s.push_back(algebra_k0(algs.back()));
    u.values.push_back(AbValue::free_value(k0s.back().rank()));
  }
  auto slot_in = [&](const Subgroup& h, int g) {
    for (int s = 0; s < h.order(); ++s)
      if (h.elements[s] == g) return s;
    throw validation_error("element outside subgroup");
  };
  for (int ki = 0; ki < lat.size(); ++ki)
    for (int hi : lat.contained_in(ki)) {
      const auto& h = lat.subgroups[hi];
      const auto& k = lat.subgroups[ki];
      Matrix inc(F, k.order(), h.order());
      for (int j = 0; j < h.order(); ++j) inc.at(slot_in(k, h.elements[j]), j) = 1;
      auto hom = make_algebra_hom(algs[hi], algs[ki], std::move(inc), "untwisted incl");
      std::vector<std::vector<int>> rb;
      for (int z : left_coset_reps(h, k)) {
        std::vector<int> v(k.order(), 0);
        v[slot_in(k, z)] = 1;
        rb.push_back(std::move(v));
      }
      IntMat trm = k0_induced_map(hom, ScalarKind::Extend, k0s[hi], k0s[ki], &rb);
      IntMat resm = k0_induced_map(hom, ScalarKind::Restrict, k0s[hi], k0s[ki]);
      u.tr[{hi, ki}] = AbMap::from_matrix(u.values[hi], u.values[ki], std::move(trm));
      u.res[{hi, ki}] = AbMap::from_matrix(u.values[ki], u.values[hi], std::move(resm));
    }
  u.conj.assign(r->group->order, std::vector<AbMap>());
  for (int x = 0; x < r->group->order; ++x)
    for (int hi = 0; hi < lat.size(); ++hi) {
      int hgi = lat.conj_index(x, hi);
      const auto& h = lat.subgroups[hi];
      const auto& hg = lat.subgroups[hgi];
      Matrix cm(F, hg.order(), h.order());
      for (int j = 0; j < h.order(); ++j)
        cm.at(slot_in(hg, r->group->conj(x, h.elements[j])), j) = 1;
      auto hom = make_algebra_hom(algs[hi], algs[hgi], std::move(cm), "untwisted conj");
      std::vector<std::vector<int>> rb{algs[hgi]->unit};
      IntMat mat = k0_induced_map(hom, ScalarKind::Extend, k0s[hi], k0s[hgi], &rb);
      u.conj[x].push_back(AbMap::from_matrix(u.values[hi], u.values[hgi], std::move(mat)));
    }

  // entry-for-entry comparison
  out.identical = true;
  for (int hi = 0; hi < lat.size() && out.identical; ++hi)
    if (out.twisted.values[hi].rank != u.values[hi].rank) {
      out.identical = false;
      out.detail = "value rank differs at subgroup " + std::to_string(hi);
    }
  for (auto it = out.twisted.res.begin(); out.identical && it != out.twisted.res.end(); ++it)
    if (!(it->second == u.res.at(it->first))) {
      out.identical = false;
      out.detail = "restriction differs at pair (" + std::to_string(it->first.first) + ", " +
                   std::to_string(it->first.second) + ")";
    }
  for (auto it = out.twisted.tr.begin(); out.identical && it != out.twisted.tr.end(); ++it)
    if (!(it->second == u.tr.at(it->first))) {
      out.identical = false;
      out.detail = "transfer differs at pair (" + std::to_string(it->first.first) + ", " +
                   std::to_string(it->first.second) + ")";
    }
  for (int x = 0; x < r->group->order && out.identical; ++x)
    for (int hi = 0; hi < lat.size() && out.identical; ++hi)
      if (!(out.twisted.conj[x][hi] == u.conj[x][hi])) {
        out.identical = false;
        out.detail = "conjugation differs at (g=" + std::to_string(x) + ", subgroup " +
                     std::to_string(hi) + ")";
      }
  return out;
}

MackeyData quillen_kn_instance(int p, int k, int i) {
  if (i < 1) throw validation_error("the instance needs i >= 1 (degree n = 2i - 1)");
  MackeyData m;
  m.group = cyclic_group(k);
  m.lattice = build_lattice(m.group, m.group->order);
  m.external_data = true;
  m.label = "K_" + std::to_string(2 * i - 1) + "(fixed fields of GF(" + std::to_string(p) + "^" +
            std::to_string(k) + ")) [external data]";
  const auto& lat = m.lattice;

  auto powll = [](long long base, int e) {
    long long out = 1;
    for (int t = 0; t < e; ++t) out *= base;
    return out;
  };
  // subgroup of order s fixes GF(p^d) with d = k/s
  std::vector<int> deg(lat.size());
  std::vector<long long> modulus(lat.size());
  for (int hi = 0; hi < lat.size(); ++hi) {
    deg[hi] = k / lat.subgroups[hi].order();
    modulus[hi] = powll(p, deg[hi] * i) - 1;
    m.values.push_back(AbValue::finite_value(cyclic_ab(modulus[hi])));
  }

  for (int ki = 0; ki < lat.size(); ++ki)
    for (int hi : lat.contained_in(ki)) {
      // res: the injection Z/(p^{d_K i} - 1) -> Z/(p^{d_H i} - 1)
      long long mult = modulus[hi] / modulus[ki];
      std::vector<int> inj(modulus[ki]);
      for (long long t = 0; t < modulus[ki]; ++t)
        inj[t] = static_cast<int>((t * mult) % modulus[hi]);
      m.res[{hi, ki}] = AbMap::from_table(m.values[ki], m.values[hi], std::move(inj));
      // tr: the surjection
      std::vector<int> sur(modulus[hi]);
      for (long long t = 0; t < modulus[hi]; ++t) sur[t] = static_cast<int>(t % modulus[ki]);
      m.tr[{hi, ki}] = AbMap::from_table(m.values[hi], m.values[ki], std::move(sur));
    }

  m.conj.assign(k, std::vector<AbMap>());
  for (int x = 0; x < k; ++x)
    for (int hi = 0; hi < lat.size(); ++hi) {
      // the Frobenius power sigma^x acts by multiplication with p^{x i}
      long long factor = 1;
      for (int t = 0; t < x * i; ++t) factor = (factor * p) % modulus[hi];
      std::vector<int> tab(modulus[hi]);
      for (long long t = 0; t < modulus[hi]; ++t)
        tab[t] = static_cast<int>((t * factor) % modulus[hi]);
      m.conj[x].push_back(AbMap::from_table(m.values[hi], m.values[hi], std::move(tab)));
    }

  if (i == 1) {
    // oracle: must agree with the unit-group instance under the canonical
    // identification by a fixed primitive element
    auto units = units_galois_mackey(p, k);
    auto field = FiniteField::make(p, k);
    long long q1 = powll(p, k) - 1;
    int omega = -1;
    for (int cand = 2; cand < field->size() && omega < 0; ++cand) {
      long long order = 1;
      int acc = cand;
      while (acc != 1) {
        acc = field->mul(acc, cand);
        ++order;
      }
      if (order == q1) omega = cand;
    }
    if (omega < 0) throw check_error("no primitive element found");

    // iso per subgroup: t -> g_d^t where g_d = omega^{(p^k-1)/(p^d-1)}
    std::vector<std::vector<int>> iso(lat.size()); // quillen index -> units local index
    for (int hi = 0; hi < lat.size(); ++hi) {
      long long e = q1 / modulus[hi];
      int gen = field->pow(omega, e);
      // local index of field elements inside the units value
      const auto& uval = units.values[hi];
      // rebuild the unit enumeration used by units_galois_mackey
      auto fixed = fixed_subring(frobenius_gring(field, m.group), lat.subgroups[hi]);
      std::vector<int> local(field->size(), -1);
      int count = 0;
      for (int xx : fixed.to_parent)
        if (xx != 0) local[xx] = count++;
      if (count != uval.finite->size) throw check_error("unit count mismatch against the oracle");
      iso[hi].resize(modulus[hi]);
      int acc = field->one();
      for (long long t = 0; t < modulus[hi]; ++t) {
        iso[hi][t] = local[acc];
        acc = field->mul(acc, gen);
      }
    }
    auto tables_agree = [&](const AbMap& ours, const AbMap& theirs, int src, int dst) {
      for (long long t = 0; t < modulus[src]; ++t)
        if (iso[dst][ours.table[t]] != theirs.table[iso[src][t]]) return false;
      return true;
    };
    for (int ki = 0; ki < lat.size(); ++ki)
      for (int hi : lat.contained_in(ki)) {
        if (!tables_agree(m.res.at({hi, ki}), units.res.at({hi, ki}), ki, hi))
          throw check_error("restriction disagrees with the unit-group oracle");
        if (!tables_agree(m.tr.at({hi, ki}), units.tr.at({hi, ki}), hi, ki))
          throw check_error("transfer disagrees with the unit-group oracle");
      }
    for (int x = 0; x < k; ++x)
      for (int hi = 0; hi < lat.size(); ++hi)
        if (!tables_agree(m.conj[x][hi], units.conj[x][hi], hi, lat.conj_index(x, hi)))
          throw check_error("conjugation disagrees with the unit-group oracle");
  }
  return m;
}

MackeyData constant_z_mackey(const GroupPtr& g) {
  MackeyData m;
  m.group = g;
  m.lattice = build_lattice(g, g->order);
  m.label = "constant Z (negative control)";
  for (int hi = 0; hi < m.lattice.size(); ++hi)
    m.values.push_back(AbValue::free_value(1, "Z"));
  auto id = AbMap::identity(m.values[0]);
  for (int ki = 0; ki < m.lattice.size(); ++ki)
    for (int hi : m.lattice.contained_in(ki)) {
      m.res[{hi, ki}] = id;
      m.tr[{hi, ki}] = id;
    }
  m.conj.assign(g->order, std::vector<AbMap>(m.lattice.size(), id));
  return m;
}

} // namespace twmack
