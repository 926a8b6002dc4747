#include "twmack/witness.hpp"

#include "twmack/errors.hpp"

namespace twmack {

WitnessReport mackey_decomposition_witness(TwistedContext& ctx, const Subgroup& j,
                                           const Subgroup& k, const Subgroup& h) {
  const auto& r = ctx.ring;
  const auto& g = *r->group;
  if (!h.contains_subgroup(j) || !h.contains_subgroup(k))
    throw validation_error("witness requires J <= H and K <= H");

  auto blocks = refined_transversal(j, k, h);
  const auto& aj = ctx.algebra(j);
  const auto& ah = ctx.algebra(h);
  const auto& tj = aj.ring;
  const auto& th = ah.ring;
  const auto& ring = *r->ring;

  WitnessReport report;
  report.double_cosets = static_cast<int>(blocks.size());

  // flattened slots (block, beta index); Q basis elements are x_i beta_{i,l}
  struct Slot {
    int block, beta, basis_elt; // basis_elt = x_i * beta_{i,l} in H
  };
  std::vector<Slot> slots;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int l = 0; l < static_cast<int>(blocks[b].betas.size()); ++l)
      slots.push_back({b, l, g.mul(blocks[b].rep, blocks[b].betas[l])});
  const int n_slots = static_cast<int>(slots.size());

  // right-coset lookup over the transversal: h = jpart * x_i beta_{i,l}
  struct CosetPos {
    int slot = -1, jpart = 0;
  };
  std::vector<CosetPos> coset_of(g.order);
  for (int s = 0; s < n_slots; ++s)
    for (int a : j.elements) {
      int elt = g.mul(a, slots[s].basis_elt);
      coset_of[elt] = {s, a};
    }

  // Q = Res_J^H (R_theta[H]); P = free module of rank n_slots over R_theta[J]
  auto rho_jh = transport_hom(rho_hom(tj, th), aj, ah);
  auto q_mod = restrict_scalars(rho_jh, regular_module(ah.algebra));
  auto reg_j = regular_module(aj.algebra);
  AlgebraModule p_mod = reg_j;
  for (int s = 1; s < n_slots; ++s) p_mod = direct_sum(p_mod, reg_j);

  // epsilon: P -> Q, (a at slot s) -> a * (1 * x_i beta_{i,l}) in R_theta[H]
  const int dim_q = q_mod.dim;
  Matrix eps(aj.prime, dim_q, p_mod.dim);
  for (int s = 0; s < n_slots; ++s)
    for (int t = 0; t < aj.algebra->dim; ++t) {
      // aj basis element t is (field basis j1) * (subgroup element of J)
      std::vector<int> e(aj.algebra->dim, 0);
      e[t] = 1;
      auto a_elem = aj.from_coords(e);
      // promote into R_theta[H] and shift by the Q basis element
      auto promoted = th->zero();
      for (int sj = 0; sj < tj->rank(); ++sj)
        promoted[th->slot_of[tj->group_elem(sj)]] = a_elem[sj];
      auto img = th->mul(promoted, th->pure(slots[s].basis_elt, ring.one));
      auto coords = ah.to_coords(img);
      for (int i = 0; i < dim_q; ++i) eps.at(i, s * aj.algebra->dim + t) = coords[i];
    }

  // (a) left-module isomorphism: eps invertible and intertwines the action
  report.left_module_iso = matrix_rank(eps) == dim_q && p_mod.dim == dim_q;
  if (report.left_module_iso)
    for (int u = 0; u < aj.algebra->dim && report.left_module_iso; ++u)
      if (!(eps.mul(p_mod.action[u]) == q_mod.action[u].mul(eps))) {
        report.left_module_iso = false;
        report.failure_detail = "epsilon does not intertwine the left action of basis element " +
                                std::to_string(u);
      }

  // (b) right R_theta[K]-structure: for every generator (r jelt at slot s) and
  // every pure multiplier r'k', the square with epsilon commutes exactly.
  report.bimodule_commutes = true;
  for (int s = 0; s < n_slots && report.bimodule_commutes; ++s) {
    const int x = blocks[slots[s].block].rep;
    const int conj_basis = g.mul(g.mul(x, blocks[slots[s].block].betas[slots[s].beta]), g.inv(x));
    for (int jelt : j.elements) {
      for (int rc = 0; rc < ring.size; ++rc) {
        if (rc == ring.zero) continue;
        // generator concrete form in R_theta[H]: (rc jelt) * (x beta x^{-1})
        auto [gen_g, gen_r] = th->mul_pure(jelt, rc, conj_basis, ring.one);
        for (int kelt : k.elements) {
          for (int rm = 0; rm < ring.size; ++rm) {
            if (rm == ring.zero) continue;
            ++report.checked_pairs;
            // P-side right action: multiply by gamma^x(r' k') = theta_x(r') x k' x^{-1}
            auto [mul_g, mul_r] = th->mul_pure(gen_g, gen_r, g.conj(x, kelt), r->act(x, rm));
            // decompose within the block: mul_g = jpart * x beta' x^{-1}
            int shifted = g.mul(mul_g, x);
            const auto& pos = coset_of[shifted];
            if (pos.slot < 0 || slots[pos.slot].block != slots[s].block) {
              report.bimodule_commutes = false;
              report.failure_detail = "right action left its double-coset block";
              break;
            }
            // epsilon of the result: (mul_r jpart') * (x beta')
            auto [lhs_g, lhs_r] =
                th->mul_pure(pos.jpart, mul_r, slots[pos.slot].basis_elt, ring.one);
            // Q side: epsilon(generator) * (rm kelt)
            auto [egen_g, egen_r] = th->mul_pure(jelt, rc, slots[s].basis_elt, ring.one);
            auto [rhs_g, rhs_r] = th->mul_pure(egen_g, egen_r, kelt, rm);
            if (lhs_g != rhs_g || lhs_r != rhs_r) {
              report.bimodule_commutes = false;
              report.failure_detail =
                  "bimodule square fails at generator (" + std::to_string(rc) + "*g" +
                  std::to_string(jelt) + " at slot " + std::to_string(s) + ") with multiplier " +
                  std::to_string(rm) + "*g" + std::to_string(kelt);
              break;
            }
          }
          if (!report.bimodule_commutes) break;
        }
        if (!report.bimodule_commutes) break;
      }
      if (!report.bimodule_commutes) break;
    }
  }

  // (c) K0 classes of both sides agree
  const auto& k0j = ctx.k0(j);
  report.k0_match = k0_multiplicities(p_mod, k0j) == k0_multiplicities(q_mod, k0j);
  if (!report.k0_match && report.failure_detail.empty())
    report.failure_detail = "K0 classes of the two sides differ";
  return report;
}

} // namespace twmack
