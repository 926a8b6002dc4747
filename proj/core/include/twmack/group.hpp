#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twmack {

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..order-1, table[i][j] is the product i*j. Validated at
/// construction: Latin square, two-sided identity, inverses, associativity.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;
  std::string label;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  /// g x g^{-1}
  int conj(int g, int x) const { return mul(mul(g, x), inverse[g]); }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr group_from_table(std::vector<std::vector<int>> table, std::string label = "");
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n); // order 2n
GroupPtr symmetric_group(int n); // n <= 5
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

/// Lexicographic rank <-> one-line permutation, for symmetric_group element naming.
std::vector<int> permutation_of_index(int n, int index);
int index_of_permutation(const std::vector<int>& perm);
/// Parses cycle notation like "(1 2)" or "(12)(345)" (1-based points) into an
/// element index of symmetric_group(n).
int symmetric_element_from_cycles(int n, const std::string& cycles);
std::string cycle_string(int n, int element);

/// A subgroup, stored as the sorted set of its element indices (canonical form).
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
};

/// Validates closure/identity/inverses and returns the canonical form.
Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> elements);
Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& generators);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup conjugate_subgroup(int g, const Subgroup& h);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

/// All subgroups, canonical form, sorted by (order, element set).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int max_order = 48);

/// For H <= K: representatives y_1,...,y_n with K the disjoint union of the
/// right cosets H y_i. y_1 is the identity, then smallest unused element first.
std::vector<int> right_coset_reps(const Subgroup& h, const Subgroup& k);
/// Left cosets z_j H of K; z_1 is the identity, smallest-index rule.
std::vector<int> left_coset_reps(const Subgroup& h, const Subgroup& k);

struct DoubleCoset {
  int rep = 0;
  int size = 0;
};
/// Representatives of J\H/K for J,K <= H. The identity's double coset comes
/// first, then smallest-index unclaimed element first. Sizes sum to |H|.
std::vector<DoubleCoset> double_coset_reps(const Subgroup& j, const Subgroup& k,
                                           const Subgroup& h);

/// Smallest g with g H g^{-1} <= K, if any.
std::optional<int> subconjugacy_witness(const Subgroup& h, const Subgroup& k);

/// One block per double coset x_i of J\H/K: betas are right coset
/// representatives of (J^{x_i} n K)\K, beta_{i,1} = identity. The flattened
/// set {x_i beta_{i,l}} is a right transversal of J\H (verified).
struct TransversalBlock {
  int rep = 0;
  std::vector<int> betas;
};
std::vector<TransversalBlock> refined_transversal(const Subgroup& j, const Subgroup& k,
                                                  const Subgroup& h);

/// The subgroup lattice of a group, with conjugacy-class bookkeeping.
/// Subgroups are indexed in canonical order; classes are sorted by their
/// lexicographically smallest member.
struct SubgroupLattice {
  GroupPtr group;
  std::vector<Subgroup> subgroups;
  std::vector<int> class_of;   // conjugacy class id per subgroup
  std::vector<int> class_reps; // subgroup index per class

  int size() const { return static_cast<int>(subgroups.size()); }
  int num_classes() const { return static_cast<int>(class_reps.size()); }
  int index_of(const Subgroup& s) const;
  int conj_index(int g, int subgroup_index) const;
  /// Indices i with subgroups[i] <= subgroups[h].
  std::vector<int> contained_in(int h) const;
};
SubgroupLattice build_lattice(const GroupPtr& g, int max_order = 48);

/// Materializes a subgroup as a standalone group; second component maps local
/// element indices back to parent indices.
std::pair<GroupPtr, std::vector<int>> subgroup_as_group(const Subgroup& h);

} // namespace twmack
