#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twmack/errors.hpp"
#include "twmack/twisted.hpp"

using namespace twmack;

namespace {

GRingPtr gf7_trivial_s3() { return trivial_gring(ring_from_field(FiniteField::make(7, 1)), symmetric_group(3)); }

GRingPtr gf9_frobenius_c2(std::vector<int> modulus = {}) {
  auto f = modulus.empty() ? FiniteField::make(3, 2) : FiniteField::make(3, 2, modulus);
  return frobenius_gring(f, cyclic_group(2));
}

} // namespace

TEST_CASE("the invertibility gate") {
  // trivial action needs |G| invertible
  CHECK_THROWS_AS((void)trivial_gring(ring_from_field(FiniteField::make(2, 1)), cyclic_group(2)),
                  validation_error);
  CHECK_THROWS_AS((void)trivial_gring(zmod_ring(6), cyclic_group(2)), validation_error);
  CHECK_NOTHROW((void)trivial_gring(ring_from_field(FiniteField::make(5, 1)), cyclic_group(2)));
  // faithful Galois actions pass even when |G| is 0 in the ring
  CHECK_NOTHROW((void)frobenius_gring(FiniteField::make(2, 6), cyclic_group(6)));
  // non-faithful part still gated: C4 acting on GF(4) through C2 has kernel of order 2
  CHECK_THROWS_AS((void)frobenius_gring(FiniteField::make(2, 2), cyclic_group(4)),
                  validation_error);
  // C6 on GF(4): kernel C3, and 3 is a unit in characteristic 2
  CHECK_NOTHROW((void)frobenius_gring(FiniteField::make(2, 2), cyclic_group(6)));
}

TEST_CASE("theta validation") {
  auto ring = ring_from_field(FiniteField::make(5, 1));
  auto c2 = cyclic_group(2);
  // swap 0 and 1: not additive
  std::vector<int> bad(5);
  for (int i = 0; i < 5; ++i) bad[i] = i;
  std::swap(bad[2], bad[3]);
  std::vector<std::vector<int>> theta{{0, 1, 2, 3, 4}, bad};
  CHECK_THROWS_AS((void)make_gring(ring, c2, theta), validation_error);
}

TEST_CASE("twisted multiplication") {
  auto r = gf7_trivial_s3();
  auto full = full_subgroup(r->group);
  auto t = make_twisted_ring(r, full);
  // (r e)(r' e) = rr' e
  auto a = t->pure(r->group->identity, 3);
  auto b = t->pure(r->group->identity, 4);
  CHECK(t->mul(a, b) == t->pure(r->group->identity, 5)); // 12 mod 7

  // trivial action: ordinary group ring product on pure elements
  for (int g1 = 0; g1 < 6; ++g1)
    for (int g2 = 0; g2 < 6; ++g2) {
      auto prod = t->mul(t->pure(g1, 2), t->pure(g2, 3));
      CHECK(prod == t->pure(r->group->mul(g1, g2), 6));
    }

  // GF(9) with a^2 = a + 1, Frobenius action: (a s)(a s) = a^4 e = 2 e
  auto r9 = gf9_frobenius_c2({2, 2, 1});
  auto t9 = make_twisted_ring(r9, full_subgroup(r9->group));
  int a9 = r9->ring->field->from_coeffs({0, 1});
  auto as = t9->pure(1, a9);
  CHECK(t9->mul(as, as) == t9->pure(0, r9->ring->field->from_coeffs({2})));
}

TEST_CASE("tau, rho, gamma") {
  auto r = gf7_trivial_s3();
  auto subs = enumerate_subgroups(r->group);
  auto h = subgroup_generated(r->group, {symmetric_element_from_cycles(3, "(12)")});
  auto th = make_twisted_ring(r, h);
  auto tg = make_twisted_ring(r, full_subgroup(r->group));

  // rho is the inclusion rh -> rh
  auto rho = rho_hom(th, tg);
  for (int g : h.elements)
    for (int c = 1; c < 7; ++c) CHECK(rho.pure_images[th->slot_of[g]][c] == tg->pure(g, c));

  // gamma^g : rh -> theta_g(r) ghg^{-1}
  int x = symmetric_element_from_cycles(3, "(13)");
  auto hx = conjugate_subgroup(x, h);
  auto thx = make_twisted_ring(r, hx);
  auto gam = gamma_hom(th, x, thx);
  for (int g : h.elements)
    for (int c = 1; c < 7; ++c)
      CHECK(gam.pure_images[th->slot_of[g]][c] == thx->pure(r->group->conj(x, g), c));

  // conjugation condition failure names a witness
  auto c3 = subgroup_generated(r->group, {symmetric_element_from_cycles(3, "(123)")});
  auto tc3 = make_twisted_ring(r, c3);
  CHECK_THROWS_WITH_AS((void)tau_hom(tc3, r->group->identity, th),
                       doctest::Contains("fails at h ="), validation_error);

  // x in the normalizer gives an automorphism with inverse tau(x^{-1})
  int g12 = symmetric_element_from_cycles(3, "(12)");
  auto aut = tau_hom(th, g12, th);
  auto aut_inv = tau_hom(th, r->group->inv(g12), th);
  auto comp = compose_homs(aut_inv, aut);
  for (int s = 0; s < th->rank(); ++s)
    for (int c = 0; c < 7; ++c) CHECK(comp.pure_images[s][c] == th->pure(th->group_elem(s), c));
}

TEST_CASE("tau functoriality over all composable triples") {
  for (const auto& r : {gf7_trivial_s3(), frobenius_gring(FiniteField::make(2, 2), cyclic_group(6))}) {
    auto subs = enumerate_subgroups(r->group);
    std::vector<TGRPtr> rings;
    rings.reserve(subs.size());
    for (const auto& s : subs) rings.push_back(make_twisted_ring(r, s));
    const int n = r->group->order;
    for (size_t hi = 0; hi < subs.size(); ++hi)
      for (size_t ji = 0; ji < subs.size(); ++ji)
        for (size_t ki = 0; ki < subs.size(); ++ki)
          for (int x = 0; x < n; ++x) {
            if (conjugate_subgroup(r->group->inv(x), subs[hi]) !=
                intersect_subgroups(conjugate_subgroup(r->group->inv(x), subs[hi]), subs[ji]))
              continue;
            for (int y = 0; y < n; ++y) {
              if (conjugate_subgroup(r->group->inv(y), subs[ji]) !=
                  intersect_subgroups(conjugate_subgroup(r->group->inv(y), subs[ji]), subs[ki]))
                continue;
              auto f1 = tau_hom(rings[hi], x, rings[ji]);
              auto f2 = tau_hom(rings[ji], y, rings[ki]);
              auto direct = tau_hom(rings[hi], r->group->mul(x, y), rings[ki]);
              CHECK(compose_homs(f2, f1).pure_images == direct.pure_images);
            }
          }
  }
}

TEST_CASE("shift maps") {
  auto r = gf7_trivial_s3();
  auto tg = make_twisted_ring(r, full_subgroup(r->group));
  auto id = shift_map(tg, r->group->identity);
  for (int g = 0; g < 6; ++g) CHECK(id.apply(tg->pure(g, 3)) == tg->pure(g, 3));

  auto r9 = gf9_frobenius_c2();
  auto t9 = make_twisted_ring(r9, full_subgroup(r9->group));
  // sh_y o sh_{y'} = sh_{y'y}, and left-linearity over every subring
  for (int y = 0; y < 2; ++y)
    for (int yp = 0; yp < 2; ++yp) {
      auto sy = shift_map(t9, y);
      auto syp = shift_map(t9, yp);
      auto s_comp = shift_map(t9, r9->group->mul(yp, y));
      for (int g = 0; g < 2; ++g)
        for (int c = 0; c < 9; ++c)
          CHECK(sy.apply(syp.apply(t9->pure(g, c))) == s_comp.apply(t9->pure(g, c)));
    }
  for (int y = 0; y < 2; ++y) {
    auto sy = shift_map(t9, y);
    for (int g1 = 0; g1 < 2; ++g1)
      for (int c1 = 0; c1 < 9; ++c1)
        for (int g2 = 0; g2 < 2; ++g2)
          for (int c2 = 0; c2 < 9; ++c2) {
            auto lhs = sy.apply(t9->mul(t9->pure(g1, c1), t9->pure(g2, c2)));
            auto rhs = t9->mul(t9->pure(g1, c1), sy.apply(t9->pure(g2, c2)));
            CHECK(lhs == rhs);
          }
  }
  CHECK_THROWS_AS((void)shift_map(make_twisted_ring(r9, trivial_subgroup(r9->group)), 1),
                  validation_error);
}

TEST_CASE("left basis decomposition round trips") {
  auto r = gf7_trivial_s3();
  auto h = subgroup_generated(r->group, {symmetric_element_from_cycles(3, "(12)")});
  auto th = make_twisted_ring(r, h);
  auto tg = make_twisted_ring(r, full_subgroup(r->group));

  auto same = left_basis_decompose(th, th);
  CHECK(same.reps.size() == 1);

  auto d = left_basis_decompose(th, tg);
  CHECK(d.reps.size() == 3);
  // express o forward = identity on pure component tuples
  for (size_t i = 0; i < d.reps.size(); ++i)
    for (int g : h.elements)
      for (int c = 1; c < 7; ++c) {
        std::vector<TwistedGroupRing::Elem> comps(d.reps.size(), th->zero());
        comps[i] = th->pure(g, c);
        auto back = d.express(d.forward(comps));
        CHECK(back == comps);
      }
  // forward o express = identity on all pure elements of the big ring
  for (int g = 0; g < 6; ++g)
    for (int c = 1; c < 7; ++c) {
      auto x = tg->pure(g, c);
      CHECK(d.forward(d.express(x)) == x);
    }
  // and on a handful of dense elements
  TwistedGroupRing::Elem dense{1, 2, 3, 4, 5, 6};
  CHECK(d.forward(d.express(dense)) == dense);
}

TEST_CASE("right basis expression") {
  auto r9 = gf9_frobenius_c2();
  auto te = make_twisted_ring(r9, trivial_subgroup(r9->group));
  auto t9 = make_twisted_ring(r9, full_subgroup(r9->group));

  auto same = right_basis_express(t9, t9);
  for (int g = 0; g < 2; ++g)
    for (int c = 1; c < 9; ++c) {
      auto x = t9->pure(g, c);
      auto comps = same.express(x);
      REQUIRE(comps.size() == 1);
      CHECK(comps[0] == x);
    }

  auto d = right_basis_express(te, t9);
  CHECK(d.reps == std::vector<int>{0, 1});
  // unit coefficient at slot j for x = 1 * z_j
  for (size_t j = 0; j < d.reps.size(); ++j) {
    auto comps = d.express(t9->pure(d.reps[j], 1));
    for (size_t i = 0; i < comps.size(); ++i)
      CHECK(comps[i] == (i == j ? te->one() : te->zero()));
  }
  // pure a*sigma decomposes with a Frobenius-twisted coefficient
  int a = r9->ring->field->from_coeffs({0, 1});
  auto comps = d.express(t9->pure(1, a));
  CHECK(comps[1] == te->pure(0, r9->ring->field->frobenius(a)));
  // reassembly inverts on every pure element
  for (int g = 0; g < 2; ++g)
    for (int c = 1; c < 9; ++c) {
      auto x = t9->pure(g, c);
      CHECK(d.assemble(d.express(x)) == x);
    }
}

TEST_CASE("twisted rings as structure algebras") {
  // GF(p), trivial group: 1-dimensional
  auto rp = trivial_gring(ring_from_field(FiniteField::make(5, 1)), cyclic_group(1));
  auto tp = make_twisted_ring(rp, full_subgroup(rp->group));
  auto ap = as_structure_algebra(tp);
  CHECK(ap.algebra->dim == 1);

  // GF(5)[C2]: 2 central idempotents
  auto r5 = trivial_gring(ring_from_field(FiniteField::make(5, 1)), cyclic_group(2));
  auto t5 = make_twisted_ring(r5, full_subgroup(r5->group));
  auto a5 = as_structure_algebra(t5);
  CHECK(a5.algebra->dim == 2);
  CHECK(primitive_central_idempotents(*a5.algebra).size() == 2);

  // GF(9)_theta[C2]: 4-dimensional over GF(3) with a single block, like M2(GF(3))
  auto r9 = gf9_frobenius_c2();
  auto t9 = make_twisted_ring(r9, full_subgroup(r9->group));
  auto a9 = as_structure_algebra(t9);
  CHECK(a9.algebra->dim == 4);
  auto idems = primitive_central_idempotents(*a9.algebra);
  REQUIRE(idems.size() == 1);
  auto blk = block_data(*a9.algebra, idems[0]);
  CHECK(blk.block_dim == 4);
  CHECK(blk.matrix_size == 2);
  CHECK(blk.center_field_dim == 1);

  // coordinate round trip
  for (int g = 0; g < 2; ++g)
    for (int c = 0; c < 9; ++c)
      CHECK(a9.from_coords(a9.to_coords(t9->pure(g, c))) == t9->pure(g, c));

  auto zr = trivial_gring(zmod_ring(5), cyclic_group(2));
  CHECK_THROWS_AS((void)as_structure_algebra(make_twisted_ring(zr, full_subgroup(zr->group))),
                  unsupported_error);
}

TEST_CASE("transported homomorphisms are verified linear maps") {
  auto r9 = gf9_frobenius_c2();
  auto te = make_twisted_ring(r9, trivial_subgroup(r9->group));
  auto t9 = make_twisted_ring(r9, full_subgroup(r9->group));
  auto ae = as_structure_algebra(te);
  auto a9 = as_structure_algebra(t9);
  auto rho = rho_hom(te, t9);
  auto hom = transport_hom(rho, ae, a9);
  CHECK(hom.map.rows == 4);
  CHECK(hom.map.cols == 2);
  // the matrix sends coordinates of x to coordinates of rho(x)
  for (int c = 0; c < 9; ++c) {
    auto lhs = hom.apply(ae.to_coords(te->pure(0, c)));
    CHECK(lhs == a9.to_coords(t9->pure(0, c)));
  }
}

TEST_CASE("ring-level operations work over non-field base rings") {
  // Z/5 and GF(3) x GF(3): everything except the K0 bridge
  auto rz = trivial_gring(zmod_ring(5), cyclic_group(2));
  auto tz = make_twisted_ring(rz, full_subgroup(rz->group));
  auto te = make_twisted_ring(rz, trivial_subgroup(rz->group));
  CHECK(tz->mul(tz->pure(1, 2), tz->pure(1, 3)) == tz->pure(0, 1)); // 6 mod 5
  auto rho = rho_hom(te, tz);
  CHECK(rho.pure_images[0][3] == tz->pure(0, 3));
  auto dec = left_basis_decompose(te, tz);
  for (int g = 0; g < 2; ++g)
    for (int c = 1; c < 5; ++c) {
      auto x = tz->pure(g, c);
      CHECK(dec.forward(dec.express(x)) == x);
    }

  auto f3 = FiniteField::make(3, 1);
  auto rp = trivial_gring(product_ring(ring_from_field(f3), ring_from_field(f3)),
                          cyclic_group(2));
  auto tp = make_twisted_ring(rp, full_subgroup(rp->group));
  auto one = rp->ring->one;
  CHECK(tp->mul(tp->pure(0, one), tp->pure(1, one)) == tp->pure(1, one));
  auto re = right_basis_express(make_twisted_ring(rp, trivial_subgroup(rp->group)), tp);
  for (int g = 0; g < 2; ++g)
    for (int c = 0; c < rp->ring->size; ++c) {
      auto x = tp->pure(g, c);
      CHECK(re.assemble(re.express(x)) == x);
    }
}

TEST_CASE("fixed subrings") {
  auto r9 = gf9_frobenius_c2();
  auto fe = fixed_subring(r9, trivial_subgroup(r9->group));
  CHECK(fe.ring->size == 9);
  auto f2 = fixed_subring(r9, full_subgroup(r9->group));
  CHECK(f2.ring->size == 3); // GF(3)
  auto rt = gf7_trivial_s3();
  for (const auto& s : enumerate_subgroups(rt->group))
    CHECK(fixed_subring(rt, s).ring->size == 7);
}

TEST_CASE("auslander map verdicts") {
  auto r9 = gf9_frobenius_c2();
  auto triv = auslander_map(r9, trivial_subgroup(r9->group));
  CHECK(triv.isomorphism);
  CHECK(triv.image_rank == 2);

  auto full = auslander_map(r9, full_subgroup(r9->group));
  CHECK(full.isomorphism);
  CHECK(full.image_rank == 4);
  CHECK(full.domain_dim == 4);
  CHECK(full.codomain_dim == 4);
  CHECK(full.module_basis.size() == 2);
  // matrix realization over R^H of the identity endomorphism is the identity
  std::vector<int> id_table(9);
  for (int i = 0; i < 9; ++i) id_table[i] = i;
  auto m = full.matrix_over_fixed(id_table);
  CHECK(m[0][0] == full.fixed.from_parent[1]);
  CHECK(m[1][1] == full.fixed.from_parent[1]);

  auto r8 = frobenius_gring(FiniteField::make(2, 3), cyclic_group(3));
  auto a8 = auslander_map(r8, full_subgroup(r8->group));
  CHECK(a8.isomorphism);
  CHECK(a8.image_rank == 9); // M3(GF(2))
}

TEST_CASE("frobenius powers beyond the generator") {
  // C3 acting on GF(64) through the square of the Frobenius: faithful, and
  // the comparison map lands in M3(GF(4))
  auto r = frobenius_gring(FiniteField::make(2, 6), cyclic_group(3), 2);
  auto full = full_subgroup(r->group);
  CHECK(fixed_subring(r, full).ring->size == 4);
  auto a = auslander_map(r, full);
  CHECK(a.isomorphism);
  CHECK(a.image_rank == 18); // dim_GF(2) M3(GF(4))

  // a power whose order does not divide the group order is not a homomorphism
  CHECK_THROWS_AS((void)frobenius_gring(FiniteField::make(2, 6), cyclic_group(4), 1),
                  validation_error);
}

TEST_CASE("end_fixed_basis dimensions") {
  auto r9 = gf9_frobenius_c2();
  CHECK(end_fixed_basis(r9, trivial_subgroup(r9->group)).size() == 2);  // End_{GF(9)}(GF(9))
  CHECK(end_fixed_basis(r9, full_subgroup(r9->group)).size() == 4);     // M2(GF(3))
  auto r64 = frobenius_gring(FiniteField::make(2, 6), cyclic_group(6));
  auto subs = enumerate_subgroups(r64->group);
  for (const auto& h : subs) {
    auto fixed = fixed_subring(r64, h);
    int d = 0;
    while ((1 << (d + 1)) <= fixed.ring->size) ++d;
    int m = 6 / d;
    CHECK(static_cast<int>(end_fixed_basis(r64, h).size()) == m * m * d);
  }
}
