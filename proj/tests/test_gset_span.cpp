#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "twmack/errors.hpp"
#include "twmack/span.hpp"

using namespace twmack;

namespace {

std::vector<long long> marks_of_element(const BurnsideElement& e, const SubgroupLattice& lat) {
  std::vector<long long> out(lat.num_classes(), 0);
  for (const auto& [piece, coeff] : e.terms) {
    auto cosets = coset_space(Subgroup{lat.group, piece.stabilizer});
    auto m = marks_vector(cosets.set, lat);
    for (int i = 0; i < lat.num_classes(); ++i) out[i] += coeff * m[i];
  }
  return out;
}

} // namespace

TEST_CASE("orbit decomposition") {
  auto s3 = symmetric_group(3);
  // G acting on itself by left translation = cosets of the trivial subgroup
  auto regular = coset_space(trivial_subgroup(s3));
  auto orbits = orbit_decompose(regular.set);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].stabilizer.order() == 1);

  auto h = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(12)")});
  auto gh = coset_space(h);
  auto o2 = orbit_decompose(gh.set);
  REQUIRE(o2.size() == 1);
  CHECK(subconjugacy_witness(o2[0].stabilizer, h).has_value());
  CHECK(o2[0].stabilizer.order() == 2);

  // sum of |G|/|stab| over orbits equals the size of the set
  auto x = disjoint_union(gh.set, regular.set);
  long long total = 0;
  for (const auto& orb : orbit_decompose(x)) total += s3->order / orb.stabilizer.order();
  CHECK(total == x.size);
}

TEST_CASE("orbits of G/J x G/K match double cosets") {
  auto s3 = symmetric_group(3);
  auto subs = enumerate_subgroups(s3);
  for (const auto& j : subs)
    for (const auto& k : subs) {
      auto prod = product_gset(coset_space(j).set, coset_space(k).set);
      auto orbits = orbit_decompose(prod);
      auto dcs = double_coset_reps(j, k, full_subgroup(s3));
      CHECK(orbits.size() == dcs.size());
    }
}

TEST_CASE("marks vectors") {
  auto c2 = cyclic_group(2);
  auto lat = build_lattice(c2);
  REQUIRE(lat.num_classes() == 2);

  auto pt = point_gset(c2);
  CHECK(marks_vector(pt, lat) == std::vector<long long>{1, 1});

  auto free_orbit = coset_space(trivial_subgroup(c2)).set;
  CHECK(marks_vector(free_orbit, lat) == std::vector<long long>{2, 0});
  auto two_fixed = disjoint_union(pt, pt);
  CHECK(marks_vector(two_fixed, lat) == std::vector<long long>{2, 2});
  // equal size, different marks: not isomorphic
  CHECK(marks_vector(free_orbit, lat) != marks_vector(two_fixed, lat));

  // additivity under disjoint union
  auto both = disjoint_union(free_orbit, two_fixed);
  CHECK(marks_vector(both, lat) == std::vector<long long>{4, 2});

  // the marks-based isomorphism test separates the equal-size pair
  CHECK_FALSE(gsets_isomorphic(free_orbit, two_fixed, lat));
  CHECK(gsets_isomorphic(disjoint_union(pt, free_orbit), disjoint_union(free_orbit, pt), lat));
}

TEST_CASE("table of marks of S3") {
  auto s3 = symmetric_group(3);
  auto lat = build_lattice(s3);
  REQUIRE(lat.num_classes() == 4);
  // rows: G/e, G/C2, G/C3, G/S3; columns: fixed points under e, C2, C3, S3
  const std::vector<std::vector<long long>> expected = {
      {6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}};
  for (int c = 0; c < 4; ++c) {
    auto cosets = coset_space(lat.subgroups[lat.class_reps[c]]);
    CHECK(marks_vector(cosets.set, lat) == expected[c]);
  }
}

TEST_CASE("pullbacks") {
  auto s3 = symmetric_group(3);
  auto j = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(12)")});
  auto k = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(123)")});
  auto gj = coset_space(j).set;
  auto gk = coset_space(k).set;
  auto pt = point_gset(s3);

  // over a point: the full product
  auto f = gmap(gj, pt, std::vector<int>(gj.size, 0));
  auto g = gmap(gk, pt, std::vector<int>(gk.size, 0));
  auto pb = pullback(f, g);
  CHECK(pb.set.size == gj.size * gk.size);

  // f = g = id: the diagonal, isomorphic to the source
  auto lat = build_lattice(s3);
  std::vector<int> idmap(gj.size);
  std::iota(idmap.begin(), idmap.end(), 0);
  auto diag = pullback(gmap(gj, gj, idmap), gmap(gj, gj, idmap));
  CHECK(marks_vector(diag.set, lat) == marks_vector(gj, lat));

  // G/J x_{G/G} G/K decomposes along double cosets J\G/K
  auto fj = gmap(gj, pt, std::vector<int>(gj.size, 0));
  auto fk = gmap(gk, pt, std::vector<int>(gk.size, 0));
  auto pb2 = pullback(fj, fk);
  GSet expected = empty_gset(s3);
  for (const auto& dc : double_coset_reps(j, k, full_subgroup(s3))) {
    auto piece = coset_space(
        intersect_subgroups(conjugate_subgroup(s3->inv(dc.rep), j), k));
    expected = expected.size == 0 ? piece.set : disjoint_union(expected, piece.set);
  }
  CHECK(marks_vector(pb2.set, lat) == marks_vector(expected, lat));

  // non-equivariant maps are rejected with a witness
  std::vector<int> bad(gj.size);
  std::iota(bad.begin(), bad.end(), 0);
  std::swap(bad[0], bad[1]);
  bool threw = false;
  try {
    (void)gmap(gj, gj, bad);
  } catch (const validation_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("not equivariant at (g=") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("span canonical form is relabeling invariant") {
  auto s3 = symmetric_group(3);
  auto j = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(12)")});
  auto gj = coset_space(j).set;
  auto pt = point_gset(s3);

  // same span, middle presented with permuted points
  auto to_pt = [&](const GSet& m) { return gmap(m, pt, std::vector<int>(m.size, 0)); };
  std::vector<int> idm(gj.size);
  std::iota(idm.begin(), idm.end(), 0);
  auto span1 = span_of_maps(gmap(gj, gj, idm), to_pt(gj));

  // relabel points of the middle by an equivariant bijection x -> g0.x
  int g0 = symmetric_element_from_cycles(3, "(123)");
  std::vector<int> relabel(gj.size);
  for (int i = 0; i < gj.size; ++i) relabel[i] = gj.act(g0, i);
  // build the relabeled action table
  std::vector<std::vector<int>> action(gj.size, std::vector<int>(s3->order));
  for (int i = 0; i < gj.size; ++i)
    for (int a = 0; a < s3->order; ++a)
      action[relabel[i]][a] = relabel[gj.act(a, i)];
  auto gj2 = gset_from_action(s3, action, "relabeled");
  std::vector<int> leg(gj.size);
  for (int i = 0; i < gj.size; ++i) leg[relabel[i]] = i;
  auto span2 = span_of_maps(gmap(gj2, gj, leg), to_pt(gj2));
  CHECK(span1.pieces == span2.pieces);
}

TEST_CASE("span composition: identity, projections, double cosets") {
  auto s3 = symmetric_group(3);
  auto j = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(12)")});
  auto k = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(123)")});
  auto gj = coset_space(j).set;
  auto gk = coset_space(k).set;
  auto pt = point_gset(s3);

  auto basis = burnside_hom_basis(gj, gk);
  auto idl = identity_span(gj);
  auto idr = identity_span(gk);
  for (const auto& b : basis) {
    CHECK(compose_spans(idl, b) == b);
    CHECK(compose_spans(b, idr) == b);
  }

  // projection spans over the point compose to the product span
  std::vector<int> idj(gj.size), idk(gk.size);
  std::iota(idj.begin(), idj.end(), 0);
  std::iota(idk.begin(), idk.end(), 0);
  auto left_proj = span_of_maps(gmap(gj, gj, idj), gmap(gj, pt, std::vector<int>(gj.size, 0)));
  auto right_proj = span_of_maps(gmap(gk, pt, std::vector<int>(gk.size, 0)), gmap(gk, gk, idk));
  auto composed = compose_spans(left_proj, right_proj);
  // the middle is G/J x G/K: pieces = orbits = double cosets
  auto expect = burnside_hom_basis(gj, gk);
  std::vector<SpanPiece> expect_pieces;
  for (const auto& e : expect) expect_pieces.push_back(e.pieces[0]);
  std::sort(expect_pieces.begin(), expect_pieces.end());
  CHECK(composed.pieces == expect_pieces);
}

TEST_CASE("span composition is associative and unital on all S3 basis spans") {
  auto s3 = symmetric_group(3);
  auto subs = enumerate_subgroups(s3);
  std::vector<GSet> objects;
  objects.reserve(subs.size());
  for (const auto& h : subs) objects.push_back(coset_space(h).set);

  for (const auto& a : objects)
    for (const auto& b : objects) {
      auto ab = burnside_hom_basis(a, b);
      auto ida = identity_span(a);
      auto idb = identity_span(b);
      for (const auto& s : ab) {
        CHECK(compose_spans(ida, s) == s);
        CHECK(compose_spans(s, idb) == s);
      }
      for (const auto& c : objects) {
        auto bc = burnside_hom_basis(b, c);
        for (const auto& d : objects) {
          auto cd = burnside_hom_basis(c, d);
          for (const auto& s : ab)
            for (const auto& t : bc)
              for (const auto& u : cd)
                CHECK(compose_spans(compose_spans(s, t), u) ==
                      compose_spans(s, compose_spans(t, u)));
        }
      }
    }
}

TEST_CASE("burnside hom basis ranks") {
  auto s3 = symmetric_group(3);
  auto pt = point_gset(s3);
  CHECK(burnside_hom_basis(pt, pt).size() == 1);
  CHECK(burnside_hom_basis(empty_gset(s3), pt).empty());

  auto h = subgroup_generated(s3, {symmetric_element_from_cycles(3, "(12)")});
  auto gh = coset_space(h).set;
  CHECK(burnside_hom_basis(gh, gh).size() == 2);

  auto subs = enumerate_subgroups(s3);
  for (const auto& a : subs)
    for (const auto& b : subs)
      CHECK(burnside_hom_basis(coset_space(a).set, coset_space(b).set).size() ==
            double_coset_reps(a, b, full_subgroup(s3)).size());
}

TEST_CASE("burnside ring of C2") {
  auto c2 = cyclic_group(2);
  auto free_cls = burnside_basis_class(c2, trivial_subgroup(c2));
  auto unit = burnside_unit(c2);

  CHECK(burnside_product(unit, free_cls) == free_cls);
  auto sq = burnside_product(free_cls, free_cls);
  CHECK(sq == burnside_scale(2, free_cls)); // [C2/e]^2 = 2 [C2/e]
}

TEST_CASE("marks are a ring homomorphism on A(S3)") {
  auto s3 = symmetric_group(3);
  auto lat = build_lattice(s3);
  std::vector<BurnsideElement> basis;
  for (int c = 0; c < lat.num_classes(); ++c)
    basis.push_back(burnside_basis_class(s3, lat.subgroups[lat.class_reps[c]]));

  for (const auto& a : basis)
    for (const auto& b : basis) {
      auto prod = burnside_product(a, b);
      CHECK(prod == burnside_product(b, a)); // commutative
      auto ma = marks_of_element(a, lat);
      auto mb = marks_of_element(b, lat);
      auto mp = marks_of_element(prod, lat);
      for (int i = 0; i < lat.num_classes(); ++i) CHECK(mp[i] == ma[i] * mb[i]);
    }
}
