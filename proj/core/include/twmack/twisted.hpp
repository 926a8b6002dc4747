#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twmack/algebra.hpp"
#include "twmack/gring.hpp"

namespace twmack {

/// The twisted group ring R_theta[H] for a subgroup H of the acting group.
/// Elements are dense coefficient vectors indexed by the position of the
/// group element in the subgroup's canonical element list; entry values are
/// ring element indices (zero entries are the omitted coefficients).
struct TwistedGroupRing {
  GRingPtr base;
  Subgroup sub;
  std::vector<int> slot_of; // group element -> position in sub.elements, or -1
  std::string label;

  using Elem = std::vector<int>;

  int rank() const { return sub.order(); }
  int group_elem(int slot) const { return sub.elements[slot]; }

  Elem zero() const { return Elem(rank(), base->ring->zero); }
  Elem one() const;
  Elem pure(int g, int r) const; // r * g, g must lie in the subgroup
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// (r1 g1)(r2 g2) = r1 theta_{g1}(r2) g1g2 as a (group element, ring element) pair.
  std::pair<int, int> mul_pure(int g1, int r1, int g2, int r2) const;
  bool is_zero(const Elem& a) const;
  std::string show(const Elem& a) const;
};

using TGRPtr = std::shared_ptr<const TwistedGroupRing>;

TGRPtr make_twisted_ring(GRingPtr base, Subgroup sub);

/// A ring homomorphism between twisted group rings, stored by its images on
/// pure elements and extended additively. Multiplicativity and unitality are
/// verified exhaustively on pure pairs at construction.
struct TGRHom {
  TGRPtr src, dst;
  std::vector<std::vector<TwistedGroupRing::Elem>> pure_images; // [slot][ring element]
  std::string label;

  const TwistedGroupRing::Elem& image_of_pure(int slot, int r) const {
    return pure_images[slot][r];
  }
  TwistedGroupRing::Elem apply(const TwistedGroupRing::Elem& a) const;
};

/// Tau(H, x, K): rh -> theta_{x^{-1}}(r) x^{-1}hx, defined when x^{-1}Hx <= K.
TGRHom tau_hom(const TGRPtr& src, int x, const TGRPtr& dst);
/// rho_H^K = Tau(H, e, K), the inclusion.
TGRHom rho_hom(const TGRPtr& src, const TGRPtr& dst);
/// gamma^g = Tau(H, g^{-1}, gHg^{-1}): rh -> theta_g(r) ghg^{-1}.
TGRHom gamma_hom(const TGRPtr& src, int g, const TGRPtr& dst);
TGRHom compose_homs(const TGRHom& second, const TGRHom& first);

/// sh_y : rk -> rky for y in K. A bijection and a left module map for every
/// subring R_theta[H], but not a ring homomorphism.
struct ShiftMap {
  TGRPtr ring;
  int y = 0;
  TwistedGroupRing::Elem apply(const TwistedGroupRing::Elem& a) const;
};
ShiftMap shift_map(const TGRPtr& k, int y);

/// R_theta[K] as a free left R_theta[H]-module on the right coset
/// representatives y_i of H\K: forward assembles, express inverts.
struct LeftBasisDecomposition {
  TGRPtr small, big; // R_theta[H], R_theta[K]
  std::vector<int> reps;
  TwistedGroupRing::Elem forward(const std::vector<TwistedGroupRing::Elem>& comps) const;
  std::vector<TwistedGroupRing::Elem> express(const TwistedGroupRing::Elem& x) const;
};
LeftBasisDecomposition left_basis_decompose(const TGRPtr& small, const TGRPtr& big);

/// R_theta[K] as a free right R_theta[H]-module on the left coset
/// representatives z_j of K/H: x = sum (1 z_j) * a_j.
struct RightBasisExpression {
  TGRPtr small, big;
  std::vector<int> reps;
  std::vector<TwistedGroupRing::Elem> express(const TwistedGroupRing::Elem& x) const;
  TwistedGroupRing::Elem assemble(const std::vector<TwistedGroupRing::Elem>& comps) const;
};
RightBasisExpression right_basis_express(const TGRPtr& small, const TGRPtr& big);

/// R_theta[H] presented as a structure algebra over the prime field GF(p),
/// with basis b_j x h (field basis element times subgroup element); index
/// = slot * k + j. Requires the base ring to be a finite field.
struct TGRAlgebra {
  TGRPtr ring;
  AlgebraPtr algebra;
  FieldPtr prime; // GF(p)
  int field_degree = 0;

  std::vector<int> to_coords(const TwistedGroupRing::Elem& a) const;
  TwistedGroupRing::Elem from_coords(const std::vector<int>& coords) const;
};
TGRAlgebra as_structure_algebra(const TGRPtr& t);

/// A verified unital multiplicative linear map between structure algebras.
struct AlgebraHom {
  AlgebraPtr src, dst;
  Matrix map; // dst.dim x src.dim over GF(p)
  std::string label;
  std::vector<int> apply(const std::vector<int>& coords) const { return map.apply(coords); }
};
/// Full basis-pair verification (quintic in the dimension; meant for small algebras).
AlgebraHom make_algebra_hom(AlgebraPtr src, AlgebraPtr dst, Matrix map, std::string label = "");
/// Transports a twisted-ring homomorphism (already verified exhaustively on
/// pure pairs) to the structure-algebra level; re-checks basis pairs there.
AlgebraHom transport_hom(const TGRHom& f, const TGRAlgebra& a, const TGRAlgebra& b);

/// The ring map R_theta[H] -> End_{R^H}(R), rg -> (t -> r theta_g(t)),
/// with an explicit bijectivity verdict for the K-theory pipeline.
struct AuslanderMap {
  GRingPtr ring;
  Subgroup h;
  FixedSubring fixed;
  std::vector<int> module_basis; // R^H-basis of R (parent element indices)
  bool isomorphism = false;
  int image_rank = 0, domain_dim = 0, codomain_dim = 0;
  std::vector<std::vector<std::vector<int>>> pure_endos; // [slot][r] -> table on R

  /// Writes an additive endomorphism table as a matrix over R^H in the chosen
  /// basis; entries are local indices into fixed.ring.
  std::vector<std::vector<int>> matrix_over_fixed(const std::vector<int>& endo) const;
};
AuslanderMap auslander_map(const GRingPtr& r, const Subgroup& h);

/// GF(p)-basis of End_{R^H}(R) as k x k matrices over GF(p) (flattened row-major),
/// where k is the field degree of the base ring. Used by the endomorphism
/// Mackey instance.
std::vector<std::vector<int>> end_fixed_basis(const GRingPtr& r, const Subgroup& h);

} // namespace twmack
