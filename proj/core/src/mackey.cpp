#include "twmack/mackey.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twmack/errors.hpp"

namespace twmack {

FiniteAbPtr make_finite_ab(std::vector<std::vector<int>> add, std::string label,
                           const std::vector<int>& generators) {
  auto g = std::make_shared<FiniteAbGroup>();
  g->size = static_cast<int>(add.size());
  if (g->size == 0) throw validation_error("finite abelian group must be nonempty");
  for (const auto& row : add) {
    if (static_cast<int>(row.size()) != g->size)
      throw validation_error("addition table is not square");
    for (int v : row)
      if (v < 0 || v >= g->size) throw validation_error("addition entry out of range");
  }
  g->add = std::move(add);
  // zero, commutativity, associativity, inverses
  g->zero = -1;
  for (int e = 0; e < g->size; ++e) {
    bool ok = true;
    for (int x = 0; x < g->size && ok; ++x) ok = g->add[e][x] == x && g->add[x][e] == x;
    if (ok) {
      g->zero = e;
      break;
    }
  }
  if (g->zero < 0) throw validation_error("no additive identity");
  for (int a = 0; a < g->size; ++a)
    for (int b = 0; b < g->size; ++b)
      if (g->add[a][b] != g->add[b][a]) throw validation_error("addition not commutative");
  if (generators.empty()) {
    if (g->size > 512)
      throw validation_error("supply generators for large tables (Light's test)");
    for (int a = 0; a < g->size; ++a)
      for (int b = 0; b < g->size; ++b)
        for (int c = 0; c < g->size; ++c)
          if (g->add[g->add[a][b]][c] != g->add[a][g->add[b][c]])
            throw validation_error("addition not associative");
  } else {
    // Light's test: with Gamma generating, a+(g+c) = (a+g)+c for g in Gamma suffices
    std::vector<char> reached(g->size, 0);
    reached[g->zero] = 1;
    std::vector<int> frontier{g->zero};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int gen : generators) {
          int y = g->add[x][gen];
          if (!reached[y]) {
            reached[y] = 1;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    for (int x = 0; x < g->size; ++x)
      if (!reached[x]) throw validation_error("given generators do not generate the table");
    for (int gen : generators)
      for (int a = 0; a < g->size; ++a)
        for (int c = 0; c < g->size; ++c)
          if (g->add[g->add[a][gen]][c] != g->add[a][g->add[gen][c]])
            throw validation_error("addition not associative (Light's test)");
  }
  g->neg.assign(g->size, -1);
  for (int a = 0; a < g->size; ++a) {
    for (int b = 0; b < g->size; ++b)
      if (g->add[a][b] == g->zero) {
        g->neg[a] = b;
        break;
      }
    if (g->neg[a] < 0) throw validation_error("element without negative");
  }
  g->label = label.empty() ? "Ab" + std::to_string(g->size) : std::move(label);
  return g;
}

FiniteAbPtr cyclic_ab(long long n, std::string label) {
  if (n < 1 || n > 8192) throw validation_error("cyclic group order out of range");
  const int m = static_cast<int>(n);
  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) add[a][b] = (a + b) % m;
  return make_finite_ab(std::move(add), label.empty() ? "Z/" + std::to_string(n) : std::move(label),
                        {1 % m});
}

AbValue AbValue::free_value(int rank, std::string label) {
  AbValue v;
  v.kind = Kind::Free;
  v.rank = rank;
  v.label = label.empty() ? "Z^" + std::to_string(rank) : std::move(label);
  return v;
}

AbValue AbValue::finite_value(FiniteAbPtr g, std::string label) {
  AbValue v;
  v.kind = Kind::Finite;
  v.finite = std::move(g);
  v.label = label.empty() ? v.finite->label : std::move(label);
  return v;
}

bool AbValue::compatible(const AbValue& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Free) return rank == o.rank;
  return finite->size == o.finite->size && finite->add == o.finite->add;
}

AbMap AbMap::identity(const AbValue& v) {
  AbMap m;
  m.source = v;
  m.target = v;
  if (v.kind == AbValue::Kind::Free) {
    m.matrix = IntMat::identity(v.rank);
  } else {
    m.table.resize(v.finite->size);
    for (int i = 0; i < v.finite->size; ++i) m.table[i] = i;
  }
  return m;
}

AbMap AbMap::from_matrix(AbValue src, AbValue dst, IntMat mat) {
  if (src.kind != AbValue::Kind::Free || dst.kind != AbValue::Kind::Free)
    throw validation_error("matrix maps require free values");
  if (mat.rows != dst.rank || mat.cols != src.rank)
    throw validation_error("map matrix shape mismatch");
  AbMap m;
  m.source = std::move(src);
  m.target = std::move(dst);
  m.matrix = std::move(mat);
  return m;
}

AbMap AbMap::from_table(AbValue src, AbValue dst, std::vector<int> t) {
  if (src.kind != AbValue::Kind::Finite || dst.kind != AbValue::Kind::Finite)
    throw validation_error("table maps require finite values");
  if (static_cast<int>(t.size()) != src.finite->size)
    throw validation_error("map table size mismatch");
  for (int v : t)
    if (v < 0 || v >= dst.finite->size) throw validation_error("map table entry out of range");
  for (int a = 0; a < src.finite->size; ++a)
    for (int b = 0; b < src.finite->size; ++b)
      if (t[src.finite->plus(a, b)] != dst.finite->plus(t[a], t[b]))
        throw validation_error("map table is not additive at (" + std::to_string(a) + ", " +
                               std::to_string(b) + ")");
  AbMap m;
  m.source = std::move(src);
  m.target = std::move(dst);
  m.table = std::move(t);
  return m;
}

AbMap AbMap::zero(const AbValue& src, const AbValue& dst) {
  AbMap m;
  m.source = src;
  m.target = dst;
  if (src.kind == AbValue::Kind::Free)
    m.matrix = IntMat(dst.rank, src.rank);
  else
    m.table.assign(src.finite->size, dst.finite->zero);
  return m;
}

bool AbMap::operator==(const AbMap& o) const {
  if (source.kind != o.source.kind) return false;
  if (source.kind == AbValue::Kind::Free) return matrix == o.matrix;
  return table == o.table;
}

AbMap compose(const AbMap& second, const AbMap& first) {
  if (!first.target.compatible(second.source))
    throw validation_error("maps are not composable: " + first.target.label + " vs " +
                           second.source.label);
  AbMap m;
  m.source = first.source;
  m.target = second.target;
  if (first.source.kind == AbValue::Kind::Free) {
    m.matrix = second.matrix.mul(first.matrix);
  } else {
    m.table.resize(first.table.size());
    for (size_t i = 0; i < first.table.size(); ++i) m.table[i] = second.table[first.table[i]];
  }
  return m;
}

AbMap add_maps(const AbMap& a, const AbMap& b) {
  if (!a.source.compatible(b.source) || !a.target.compatible(b.target))
    throw validation_error("cannot add maps with different endpoints");
  AbMap m;
  m.source = a.source;
  m.target = a.target;
  if (a.source.kind == AbValue::Kind::Free) {
    m.matrix = a.matrix.add(b.matrix);
  } else {
    m.table.resize(a.table.size());
    for (size_t i = 0; i < a.table.size(); ++i)
      m.table[i] = a.target.finite->plus(a.table[i], b.table[i]);
  }
  return m;
}

const AbMap& MackeyData::res_map(int sub, int super) const {
  auto it = res.find({sub, super});
  if (it == res.end()) throw validation_error("missing restriction map");
  return it->second;
}

const AbMap& MackeyData::tr_map(int sub, int super) const {
  auto it = tr.find({sub, super});
  if (it == tr.end()) throw validation_error("missing transfer map");
  return it->second;
}

const AbMap& MackeyData::conj_map(int g, int sub) const { return conj.at(g).at(sub); }

bool AxiomReport::axiom_passed(const std::string& name) const {
  for (const auto& f : failures)
    if (f.axiom == name) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& [axiom, count] : checked)
    os << axiom << ": " << (axiom_passed(axiom) ? "pass" : "FAIL") << " (" << count
       << " instances)\n";
  return os.str();
}

namespace {

std::string subgroup_name(const SubgroupLattice& lat, int idx) {
  const auto& s = lat.subgroups[idx];
  std::string out = "H" + std::to_string(idx) + "(order " + std::to_string(s.order()) + ")";
  return out;
}

/// All members of the double coset JxK, used to build the alternate transversal.
std::vector<int> double_coset_members(const FiniteGroup& g, const Subgroup& j, const Subgroup& k,
                                      int x) {
  std::set<int> members;
  for (int a : j.elements)
    for (int b : k.elements) members.insert(g.mul(g.mul(a, x), b));
  return {members.begin(), members.end()};
}

} // namespace

AxiomReport check_axioms(const MackeyData& m) {
  AxiomReport report;
  const auto& lat = m.lattice;
  const auto& g = *m.group;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    report.failures.push_back({axiom, witness});
  };
  auto tick = [&](const std::string& axiom) { ++report.checked[axiom]; };

  // MF0: identities
  for (int hi = 0; hi < lat.size(); ++hi) {
    tick("MF0");
    auto id = AbMap::identity(m.values[hi]);
    if (!(m.res_map(hi, hi) == id)) fail("MF0", "res at " + subgroup_name(lat, hi));
    if (!(m.tr_map(hi, hi) == id)) fail("MF0", "tr at " + subgroup_name(lat, hi));
    for (int a : lat.subgroups[hi].elements)
      if (!(m.conj_map(a, hi) == id))
        fail("MF0", "conj by member " + std::to_string(a) + " at " + subgroup_name(lat, hi));
  }

  // MF1 / MF2: transitivity along chains J <= K <= H
  for (int hi = 0; hi < lat.size(); ++hi)
    for (int ki : lat.contained_in(hi))
      for (int ji : lat.contained_in(ki)) {
        tick("MF1");
        if (!(compose(m.res_map(ji, ki), m.res_map(ki, hi)) == m.res_map(ji, hi)))
          fail("MF1", subgroup_name(lat, ji) + " <= " + subgroup_name(lat, ki) + " <= " +
                          subgroup_name(lat, hi));
        tick("MF2");
        if (!(compose(m.tr_map(ki, hi), m.tr_map(ji, ki)) == m.tr_map(ji, hi)))
          fail("MF2", subgroup_name(lat, ji) + " <= " + subgroup_name(lat, ki) + " <= " +
                          subgroup_name(lat, hi));
      }

  // MF3: conj composition
  for (int hi = 0; hi < lat.size(); ++hi)
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) {
        tick("MF3");
        int hb = lat.conj_index(b, hi);
        auto lhs = compose(m.conj_map(a, hb), m.conj_map(b, hi));
        if (!(lhs == m.conj_map(g.mul(a, b), hi)))
          fail("MF3", "g=" + std::to_string(a) + ", h=" + std::to_string(b) + " at " +
                          subgroup_name(lat, hi));
      }

  // MF4 / MF5: conjugation compatibility with res and tr
  for (int hi = 0; hi < lat.size(); ++hi)
    for (int ki : lat.contained_in(hi))
      for (int a = 0; a < g.order; ++a) {
        int hgi = lat.conj_index(a, hi), kgi = lat.conj_index(a, ki);
        tick("MF4");
        if (!(compose(m.res_map(kgi, hgi), m.conj_map(a, hi)) ==
              compose(m.conj_map(a, ki), m.res_map(ki, hi))))
          fail("MF4", "g=" + std::to_string(a) + ", " + subgroup_name(lat, ki) + " <= " +
                          subgroup_name(lat, hi));
        tick("MF5");
        if (!(compose(m.conj_map(a, hi), m.tr_map(ki, hi)) ==
              compose(m.tr_map(kgi, hgi), m.conj_map(a, ki))))
          fail("MF5", "g=" + std::to_string(a) + ", " + subgroup_name(lat, ki) + " <= " +
                          subgroup_name(lat, hi));
      }

  // MF6: the double coset formula, with two transversals
  for (int hi = 0; hi < lat.size(); ++hi)
    for (int ji : lat.contained_in(hi))
      for (int ki : lat.contained_in(hi)) {
        tick("MF6");
        const auto& J = lat.subgroups[ji];
        const auto& K = lat.subgroups[ki];
        const auto& H = lat.subgroups[hi];
        auto lhs = compose(m.res_map(ji, hi), m.tr_map(ki, hi));

        auto rhs_for = [&](const std::vector<int>& reps) {
          AbMap acc = AbMap::zero(m.values[ki], m.values[ji]);
          for (int x : reps) {
            Subgroup jx_k = intersect_subgroups(conjugate_subgroup(g.inv(x), J), K);
            int small = lat.index_of(jx_k);
            int conj_small = lat.conj_index(x, small); // J n xKx^{-1}
            auto term = compose(m.tr_map(conj_small, ji),
                                compose(m.conj_map(x, small), m.res_map(small, ki)));
            acc = add_maps(acc, term);
          }
          return acc;
        };

        auto cosets = double_coset_reps(J, K, H);
        std::vector<int> reps1, reps2;
        for (const auto& dc : cosets) {
          reps1.push_back(dc.rep);
          auto members = double_coset_members(g, J, K, dc.rep);
          reps2.push_back(members.back()); // deliberately different where possible
        }
        auto rhs1 = rhs_for(reps1);
        auto rhs2 = rhs_for(reps2);
        std::string where = subgroup_name(lat, ji) + ", " + subgroup_name(lat, ki) + " <= " +
                            subgroup_name(lat, hi);
        if (!(rhs1 == rhs2)) fail("MF6", "transversal dependence at " + where);
        if (!(lhs == rhs1)) fail("MF6", where);
      }

  return report;
}

} // namespace twmack
