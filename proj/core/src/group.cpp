#include "twmack/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "twmack/errors.hpp"

namespace twmack {

namespace {

void validate_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw validation_error("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw validation_error("group table entry out of range");
  }
  // Latin square
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]++)
        throw validation_error("group table row " + std::to_string(i) + " is not a permutation");
      if (seen_col[table[j][i]]++)
        throw validation_error("group table column " + std::to_string(i) + " is not a permutation");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          std::ostringstream os;
          os << "associativity fails at (" << i << ", " << j << ", " << k << ")";
          throw validation_error(os.str());
        }
}

int find_identity(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw validation_error("group table has no two-sided identity");
}

} // namespace

GroupPtr group_from_table(std::vector<std::vector<int>> table, std::string label) {
  validate_table(table);
  auto g = std::make_shared<FiniteGroup>();
  g->order = static_cast<int>(table.size());
  g->identity = find_identity(table);
  g->inverse.assign(g->order, -1);
  for (int i = 0; i < g->order; ++i) {
    for (int j = 0; j < g->order; ++j)
      if (table[i][j] == g->identity && table[j][i] == g->identity) {
        g->inverse[i] = j;
        break;
      }
    if (g->inverse[i] < 0)
      throw validation_error("element " + std::to_string(i) + " has no inverse");
  }
  g->table = std::move(table);
  g->label = label.empty() ? "G" + std::to_string(g->order) : std::move(label);
  return g;
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw validation_error("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = (i + j) % n;
  return group_from_table(std::move(table), "C" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw validation_error("dihedral parameter must be positive");
  // element f*n + k encodes s^f r^k; relations r^n = s^2 = e, s r = r^{-1} s
  const int order = 2 * n;
  auto mod = [n](int a) { return ((a % n) + n) % n; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int k2 = 0; k2 < n; ++k2) {
          int a = f1 * n + k1, b = f2 * n + k2;
          int f, k;
          if (f1 == 0 && f2 == 0) {
            f = 0; k = mod(k1 + k2);
          } else if (f1 == 0 && f2 == 1) {
            f = 1; k = mod(k2 - k1);
          } else if (f1 == 1 && f2 == 0) {
            f = 1; k = mod(k1 + k2);
          } else {
            f = 0; k = mod(k2 - k1);
          }
          table[a][b] = f * n + k;
        }
  return group_from_table(std::move(table), "D" + std::to_string(n));
}

std::vector<int> permutation_of_index(int n, int index) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  if (index < 0 || index >= fact[n]) throw validation_error("permutation index out of range");
  std::vector<int> perm;
  perm.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    int q = index / fact[i];
    index %= fact[i];
    perm.push_back(pool[q]);
    pool.erase(pool.begin() + q);
  }
  return perm;
}

int index_of_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  int index = 0;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(pool.begin(), pool.end(), perm[i]);
    if (it == pool.end()) throw validation_error("not a permutation");
    index += static_cast<int>(it - pool.begin()) * fact[n - 1 - i];
    pool.erase(it);
  }
  return index;
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 5) throw validation_error("symmetric_group supports 1 <= n <= 5");
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::vector<std::vector<int>> perms(order);
  for (int i = 0; i < order; ++i) perms[i] = permutation_of_index(n, i);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<int> comp(n);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      // (p_i * p_j)(x) = p_i(p_j(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index_of_permutation(comp);
    }
  return group_from_table(std::move(table), "S" + std::to_string(n));
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order, nb = b->order, n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          table[a1 * nb + b1][a2 * nb + b2] = a->mul(a1, a2) * nb + b->mul(b1, b2);
  return group_from_table(std::move(table), a->label + "x" + b->label);
}

int symmetric_element_from_cycles(int n, const std::string& cycles) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> cycle;
  bool in_cycle = false;
  auto close_cycle = [&]() {
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      perm[from] = to;
    }
    cycle.clear();
  };
  for (size_t pos = 0; pos < cycles.size(); ++pos) {
    char c = cycles[pos];
    if (c == '(') {
      if (in_cycle) throw validation_error("nested '(' in cycle notation");
      in_cycle = true;
    } else if (c == ')') {
      if (!in_cycle) throw validation_error("unmatched ')' in cycle notation");
      close_cycle();
      in_cycle = false;
    } else if (c >= '1' && c <= '9') {
      int point = c - '1';
      if (point >= n) throw validation_error("cycle point exceeds the degree");
      if (!in_cycle) throw validation_error("cycle point outside parentheses");
      cycle.push_back(point);
    } else if (c == ' ' || c == ',') {
      continue;
    } else {
      throw validation_error(std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (in_cycle) throw validation_error("unterminated cycle");
  // perm maps point -> image; as a function it must be composed into one-line form
  std::vector<int> oneline(n);
  for (int x = 0; x < n; ++x) oneline[x] = perm[x];
  return index_of_permutation(oneline);
}

std::string cycle_string(int n, int element) {
  std::vector<int> perm = permutation_of_index(n, element);
  std::vector<char> used(n, 0);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (used[start] || perm[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!used[x]) {
      used[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = perm[x];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int x : elements)
    if (x < 0 || x >= g->order) throw validation_error("subgroup element out of range");
  Subgroup s{std::move(g), std::move(elements)};
  if (!s.contains(s.parent->identity)) throw validation_error("subgroup misses the identity");
  for (int a : s.elements) {
    if (!s.contains(s.parent->inv(a))) throw validation_error("subgroup not closed under inverse");
    for (int b : s.elements)
      if (!s.contains(s.parent->mul(a, b)))
        throw validation_error("subgroup not closed under multiplication");
  }
  return s;
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& generators) {
  std::set<int> elems{g->identity};
  for (int x : generators) {
    if (x < 0 || x >= g->order) throw validation_error("generator out of range");
    elems.insert(x);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(elems.begin(), elems.end());
    for (int a : snapshot)
      for (int b : snapshot)
        if (elems.insert(g->mul(a, b)).second) grew = true;
    for (int a : snapshot)
      if (elems.insert(g->inv(a)).second) grew = true;
  }
  Subgroup s{std::move(g), std::vector<int>(elems.begin(), elems.end())};
  return s;
}

Subgroup trivial_subgroup(GroupPtr g) {
  int e = g->identity;
  return Subgroup{std::move(g), {e}};
}

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(g->order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(g), std::move(all)};
}

Subgroup conjugate_subgroup(int g, const Subgroup& h) {
  const auto& grp = *h.parent;
  std::vector<int> elems;
  elems.reserve(h.elements.size());
  for (int x : h.elements) elems.push_back(grp.conj(g, x));
  std::sort(elems.begin(), elems.end());
  return Subgroup{h.parent, std::move(elems)};
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int max_order) {
  if (g->order > max_order)
    throw validation_error("group order " + std::to_string(g->order) +
                           " exceeds the subgroup enumeration bound " + std::to_string(max_order));
  std::set<std::vector<int>> found;
  found.insert({g->identity});
  std::vector<std::vector<int>> frontier{{g->identity}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& elems : frontier) {
      Subgroup s{g, elems};
      for (int x = 0; x < g->order; ++x) {
        if (s.contains(x)) continue;
        std::vector<int> gens = elems;
        gens.push_back(x);
        Subgroup bigger = subgroup_generated(g, gens);
        if (found.insert(bigger.elements).second) next.push_back(bigger.elements);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(Subgroup{g, elems});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<int> right_coset_reps(const Subgroup& h, const Subgroup& k) {
  if (!k.contains_subgroup(h)) throw validation_error("right_coset_reps requires H <= K");
  const auto& g = *h.parent;
  std::vector<char> covered(g.order, 0);
  std::vector<int> reps;
  auto claim = [&](int y) {
    reps.push_back(y);
    for (int a : h.elements) covered[g.mul(a, y)] = 1;
  };
  claim(g.identity);
  for (int y : k.elements)
    if (!covered[y]) claim(y);
  return reps;
}

std::vector<int> left_coset_reps(const Subgroup& h, const Subgroup& k) {
  if (!k.contains_subgroup(h)) throw validation_error("left_coset_reps requires H <= K");
  const auto& g = *h.parent;
  std::vector<char> covered(g.order, 0);
  std::vector<int> reps;
  auto claim = [&](int z) {
    reps.push_back(z);
    for (int a : h.elements) covered[g.mul(z, a)] = 1;
  };
  claim(g.identity);
  for (int z : k.elements)
    if (!covered[z]) claim(z);
  return reps;
}

std::vector<DoubleCoset> double_coset_reps(const Subgroup& j, const Subgroup& k,
                                           const Subgroup& h) {
  if (!h.contains_subgroup(j) || !h.contains_subgroup(k))
    throw validation_error("double_coset_reps requires J <= H and K <= H");
  const auto& g = *h.parent;
  std::vector<char> covered(g.order, 0);
  std::vector<DoubleCoset> out;
  auto claim = [&](int x) {
    int size = 0;
    for (int a : j.elements)
      for (int b : k.elements) {
        int y = g.mul(g.mul(a, x), b);
        if (!covered[y]) {
          covered[y] = 1;
          ++size;
        }
      }
    out.push_back({x, size});
  };
  claim(g.identity);
  for (int x : h.elements)
    if (!covered[x]) claim(x);
  int total = 0;
  for (const auto& dc : out) total += dc.size;
  if (total != h.order()) throw check_error("double cosets do not tile the group");
  return out;
}

std::optional<int> subconjugacy_witness(const Subgroup& h, const Subgroup& k) {
  const auto& g = *h.parent;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int a : h.elements)
      if (!k.contains(g.conj(x, a))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

std::vector<TransversalBlock> refined_transversal(const Subgroup& j, const Subgroup& k,
                                                  const Subgroup& h) {
  const auto& g = *h.parent;
  auto cosets = double_coset_reps(j, k, h);
  std::vector<TransversalBlock> out;
  out.reserve(cosets.size());
  for (const auto& dc : cosets) {
    Subgroup jx = conjugate_subgroup(g.inv(dc.rep), j); // J^x = x^{-1} J x
    Subgroup meet = intersect_subgroups(jx, k);
    out.push_back({dc.rep, right_coset_reps(meet, k)});
  }
  // the flattened set {x_i beta_{i,l}} must tile J\H
  std::vector<char> covered(g.order, 0);
  int cosets_seen = 0;
  for (const auto& block : out)
    for (int beta : block.betas) {
      int rep = g.mul(block.rep, beta);
      if (covered[rep]) throw check_error("refined transversal covers a right coset twice");
      for (int a : j.elements) covered[g.mul(a, rep)] = 1;
      ++cosets_seen;
    }
  if (cosets_seen * j.order() != h.order())
    throw check_error("refined transversal does not cover J\\H");
  return out;
}

int SubgroupLattice::index_of(const Subgroup& s) const {
  for (int i = 0; i < size(); ++i)
    if (subgroups[i].elements == s.elements) return i;
  throw validation_error("subgroup not present in the lattice");
}

int SubgroupLattice::conj_index(int g, int subgroup_index) const {
  return index_of(conjugate_subgroup(g, subgroups[subgroup_index]));
}

std::vector<int> SubgroupLattice::contained_in(int h) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (subgroups[h].contains_subgroup(subgroups[i])) out.push_back(i);
  return out;
}

SubgroupLattice build_lattice(const GroupPtr& g, int max_order) {
  SubgroupLattice lat;
  lat.group = g;
  lat.subgroups = enumerate_subgroups(g, max_order);
  const int m = lat.size();
  lat.class_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (lat.class_of[i] >= 0) continue;
    int cls = static_cast<int>(lat.class_reps.size());
    lat.class_reps.push_back(i);
    for (int x = 0; x < g->order; ++x) {
      int img = lat.index_of(conjugate_subgroup(x, lat.subgroups[i]));
      if (lat.class_of[img] < 0) lat.class_of[img] = cls;
    }
  }
  return lat;
}

std::pair<GroupPtr, std::vector<int>> subgroup_as_group(const Subgroup& h) {
  const auto& g = *h.parent;
  const int n = h.order();
  std::vector<int> to_parent = h.elements;
  std::vector<int> from_parent(g.order, -1);
  for (int i = 0; i < n; ++i) from_parent[to_parent[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = from_parent[g.mul(to_parent[i], to_parent[j])];
  return {group_from_table(std::move(table), g.label + "-sub" + std::to_string(n)),
          std::move(to_parent)};
}

} // namespace twmack
