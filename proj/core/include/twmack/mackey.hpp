#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twmack/group.hpp"
#include "twmack/int_matrix.hpp"

namespace twmack {

/// An explicit finite abelian group: addition table, verified at construction.
struct FiniteAbGroup {
  int size = 0;
  std::vector<std::vector<int>> add;
  int zero = 0;
  std::vector<int> neg;
  std::string label;

  int plus(int a, int b) const { return add[a][b]; }
};
using FiniteAbPtr = std::shared_ptr<const FiniteAbGroup>;

/// For tables beyond a few hundred elements a generating set must be supplied;
/// associativity is then verified by Light's test against the generators.
FiniteAbPtr make_finite_ab(std::vector<std::vector<int>> add, std::string label = "",
                           const std::vector<int>& generators = {});
FiniteAbPtr cyclic_ab(long long n, std::string label = "");

/// A Mackey-functor value: either free Z^r or an explicit finite abelian group.
struct AbValue {
  enum class Kind { Free, Finite };
  Kind kind = Kind::Free;
  int rank = 0;
  FiniteAbPtr finite;
  std::string label;

  static AbValue free_value(int rank, std::string label = "");
  static AbValue finite_value(FiniteAbPtr g, std::string label = "");
  int size_or_rank() const { return kind == Kind::Free ? rank : finite->size; }
  bool compatible(const AbValue& o) const;
};

/// An additive map between values: an integer matrix on free values, an
/// element-level function table on finite ones (additivity checked
/// exhaustively at construction).
struct AbMap {
  AbValue source, target;
  IntMat matrix;
  std::vector<int> table;

  static AbMap identity(const AbValue& v);
  static AbMap from_matrix(AbValue src, AbValue dst, IntMat m);
  static AbMap from_table(AbValue src, AbValue dst, std::vector<int> t);
  static AbMap zero(const AbValue& src, const AbValue& dst);
  bool operator==(const AbMap& o) const;
};
AbMap compose(const AbMap& second, const AbMap& first);
AbMap add_maps(const AbMap& a, const AbMap& b);

/// Values over every subgroup with restriction (down the lattice), transfer
/// (up), and conjugation maps for every (g, H). For H <= K:
///   res(H, K): M(K) -> M(H),  tr(H, K): M(H) -> M(K),
///   conj(g, H): M(H) -> M(gHg^{-1}).
struct MackeyData {
  GroupPtr group;
  SubgroupLattice lattice;
  std::vector<AbValue> values;
  std::map<std::pair<int, int>, AbMap> res;
  std::map<std::pair<int, int>, AbMap> tr;
  std::vector<std::vector<AbMap>> conj; // [g][subgroup index]
  std::string label;
  bool external_data = false;

  const AbMap& res_map(int sub, int super) const;
  const AbMap& tr_map(int sub, int super) const;
  const AbMap& conj_map(int g, int sub) const;
};

struct AxiomFailure {
  std::string axiom;
  std::string witness;
};
struct AxiomReport {
  std::map<std::string, long long> checked;
  std::vector<AxiomFailure> failures;

  bool axiom_passed(const std::string& name) const;
  bool all_passed() const { return failures.empty(); }
  std::string summary() const;
};

/// Runs MF0..MF6 over every admissible tuple of the stored lattice. MF6 is
/// evaluated with the canonical double-coset transversal and re-evaluated
/// with a deliberately different one; both must produce the identical map.
AxiomReport check_axioms(const MackeyData& m);

} // namespace twmack
