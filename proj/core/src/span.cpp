#include "twmack/span.hpp"

#include <algorithm>
#include <map>

#include "twmack/errors.hpp"

namespace twmack {

SpanPiece canonical_piece(const GSet& left, const GSet& right, const Subgroup& stab,
                          int left_anchor, int right_anchor) {
  const auto& g = *left.group;
  for (int a : stab.elements)
    if (left.act(a, left_anchor) != left_anchor || right.act(a, right_anchor) != right_anchor)
      throw validation_error("piece stabilizer does not fix the anchors");
  SpanPiece best;
  bool have = false;
  for (int x = 0; x < g.order; ++x) {
    SpanPiece cand;
    cand.stabilizer = conjugate_subgroup(x, stab).elements;
    cand.left_anchor = left.act(x, left_anchor);
    cand.right_anchor = right.act(x, right_anchor);
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  }
  return best;
}

SpanClass identity_span(const GSet& s) {
  SpanClass out{s, s, {}};
  for (const auto& orbit : orbit_decompose(s))
    out.pieces.push_back(
        canonical_piece(s, s, orbit.stabilizer, orbit.representative, orbit.representative));
  std::sort(out.pieces.begin(), out.pieces.end());
  return out;
}

SpanClass span_of_maps(const GMap& to_left, const GMap& to_right) {
  if (!(to_left.src == to_right.src)) throw validation_error("span legs need a common middle");
  SpanClass out{to_left.dst, to_right.dst, {}};
  for (const auto& orbit : orbit_decompose(to_left.src))
    out.pieces.push_back(canonical_piece(out.left, out.right, orbit.stabilizer,
                                         to_left.image[orbit.representative],
                                         to_right.image[orbit.representative]));
  std::sort(out.pieces.begin(), out.pieces.end());
  return out;
}

SpanRealization realize_span(const SpanClass& s) {
  GSet middle = empty_gset(s.left.group);
  std::vector<int> left_img, right_img;
  for (const auto& piece : s.pieces) {
    Subgroup stab{s.left.group, piece.stabilizer};
    auto cosets = coset_space(stab);
    for (size_t i = 0; i < cosets.reps.size(); ++i) {
      left_img.push_back(s.left.act(cosets.reps[i], piece.left_anchor));
      right_img.push_back(s.right.act(cosets.reps[i], piece.right_anchor));
    }
    middle = middle.size == 0 ? cosets.set : disjoint_union(middle, cosets.set);
  }
  SpanRealization out;
  out.to_left = gmap(middle, s.left, std::move(left_img));
  out.to_right = gmap(middle, s.right, std::move(right_img));
  out.middle = std::move(middle);
  return out;
}

SpanClass compose_spans(const SpanClass& s, const SpanClass& t) {
  if (!(s.right == t.left))
    throw validation_error("span composition: middle objects do not match");
  auto rs = realize_span(s);
  auto rt = realize_span(t);
  auto pb = pullback(rs.to_right, rt.to_left);
  // W -> s.middle -> s.left and W -> t.middle -> t.right
  std::vector<int> left_img(pb.set.size), right_img(pb.set.size);
  for (int i = 0; i < pb.set.size; ++i) {
    left_img[i] = rs.to_left.image[pb.to_left.image[i]];
    right_img[i] = rt.to_right.image[pb.to_right.image[i]];
  }
  return span_of_maps(gmap(pb.set, s.left, std::move(left_img)),
                      gmap(pb.set, t.right, std::move(right_img)));
}

std::vector<SpanClass> burnside_hom_basis(const GSet& s, const GSet& t) {
  std::vector<SpanClass> out;
  if (s.size == 0 || t.size == 0) return out;
  auto prod = product_gset(s, t);
  for (const auto& orbit : orbit_decompose(prod)) {
    int x = orbit.representative / t.size, y = orbit.representative % t.size;
    SpanClass span{s, t, {canonical_piece(s, t, orbit.stabilizer, x, y)}};
    out.push_back(std::move(span));
  }
  std::sort(out.begin(), out.end(),
            [](const SpanClass& a, const SpanClass& b) { return a.pieces[0] < b.pieces[0]; });
  return out;
}

namespace {

void normalize(BurnsideElement& e) {
  std::map<SpanPiece, long long> acc;
  for (auto& [piece, c] : e.terms) acc[piece] += c;
  e.terms.clear();
  for (auto& [piece, c] : acc)
    if (c != 0) e.terms.emplace_back(piece, c);
}

} // namespace

BurnsideElement burnside_element(const SpanClass& s) {
  BurnsideElement out{s.left, s.right, {}};
  for (const auto& piece : s.pieces) out.terms.emplace_back(piece, 1);
  normalize(out);
  return out;
}

BurnsideElement burnside_add(const BurnsideElement& a, const BurnsideElement& b) {
  if (!(a.left == b.left) || !(a.right == b.right))
    throw validation_error("cannot add spans between different objects");
  BurnsideElement out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  normalize(out);
  return out;
}

BurnsideElement burnside_scale(long long c, const BurnsideElement& a) {
  BurnsideElement out = a;
  for (auto& [piece, coeff] : out.terms) coeff *= c;
  normalize(out);
  return out;
}

BurnsideElement burnside_basis_class(const GroupPtr& g, const Subgroup& l) {
  auto pt = point_gset(g);
  SpanClass span{pt, pt, {canonical_piece(pt, pt, l, 0, 0)}};
  return burnside_element(span);
}

BurnsideElement burnside_unit(const GroupPtr& g) {
  return burnside_basis_class(g, full_subgroup(g));
}

BurnsideElement burnside_product(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.left.group.get() != b.left.group.get())
    throw validation_error("Burnside product requires elements over the same group");
  if (a.left.size != 1 || a.right.size != 1 || b.left.size != 1 || b.right.size != 1)
    throw validation_error("Burnside product is defined over (pt, pt) spans");
  BurnsideElement out{a.left, a.right, {}};
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) {
      SpanClass sa{a.left, a.right, {pa}};
      SpanClass sb{b.left, b.right, {pb}};
      auto comp = compose_spans(sa, sb);
      for (const auto& piece : comp.pieces) out.terms.emplace_back(piece, ca * cb);
    }
  normalize(out);
  return out;
}

} // namespace twmack
