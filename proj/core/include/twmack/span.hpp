#pragma once

#include <vector>

#include "twmack/gset.hpp"

namespace twmack {

/// One transitive summand of a span middle, in canonical form: the orbit G/L
/// with base-point anchors in the feet. Canonicalization minimizes
/// (elements of gLg^{-1}, g.s, g.t) over g, so structural equality is
/// isomorphism of spans.
struct SpanPiece {
  std::vector<int> stabilizer;
  int left_anchor = 0;
  int right_anchor = 0;

  auto tie() const { return std::tie(stabilizer, left_anchor, right_anchor); }
  bool operator<(const SpanPiece& o) const { return tie() < o.tie(); }
  bool operator==(const SpanPiece& o) const { return tie() == o.tie(); }
};

/// An isomorphism class of spans left <- U -> right, stored as the sorted
/// multiset of canonical transitive pieces of U.
struct SpanClass {
  GSet left, right;
  std::vector<SpanPiece> pieces;

  bool operator==(const SpanClass& o) const {
    return left == o.left && right == o.right && pieces == o.pieces;
  }
};

SpanPiece canonical_piece(const GSet& left, const GSet& right, const Subgroup& stab,
                          int left_anchor, int right_anchor);
SpanClass identity_span(const GSet& s);
SpanClass span_of_maps(const GMap& to_left, const GMap& to_right);

struct SpanRealization {
  GSet middle;
  GMap to_left, to_right;
};
SpanRealization realize_span(const SpanClass& s);

/// Pullback composition; s goes from S to T, t from T to V.
SpanClass compose_spans(const SpanClass& s, const SpanClass& t);

/// One span with transitive middle per orbit of S x T (the middle embeds in
/// the product); the count equals the number of orbits of S x T.
std::vector<SpanClass> burnside_hom_basis(const GSet& s, const GSet& t);

/// An integer combination of span classes between two fixed feet; the group
/// completion of the span monoid. Zero coefficients are pruned and terms are
/// kept sorted by piece.
struct BurnsideElement {
  GSet left, right;
  std::vector<std::pair<SpanPiece, long long>> terms;

  bool operator==(const BurnsideElement& o) const {
    return left == o.left && right == o.right && terms == o.terms;
  }
};

BurnsideElement burnside_element(const SpanClass& s);
BurnsideElement burnside_add(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement burnside_scale(long long c, const BurnsideElement& a);
/// The class of the transitive H-set [pt <- G/L -> pt] in A(G).
BurnsideElement burnside_basis_class(const GroupPtr& g, const Subgroup& l);
BurnsideElement burnside_unit(const GroupPtr& g);
/// Product in the Burnside ring A(G) = Hom(pt, pt): bilinear extension of
/// [X][Y] = [X x Y].
BurnsideElement burnside_product(const BurnsideElement& a, const BurnsideElement& b);

} // namespace twmack
