#include "twmack/gset.hpp"

#include <algorithm>
#include <map>

#include "twmack/errors.hpp"

namespace twmack {

GSet gset_from_action(GroupPtr group, std::vector<std::vector<int>> action, std::string label) {
  GSet x;
  x.size = static_cast<int>(action.size());
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != group->order)
      throw validation_error("action table must have one column per group element");
    for (int v : row)
      if (v < 0 || v >= x.size) throw validation_error("action image out of range");
  }
  x.group = std::move(group);
  x.action = std::move(action);
  x.label = std::move(label);
  const auto& g = *x.group;
  for (int pt = 0; pt < x.size; ++pt) {
    if (x.act(g.identity, pt) != pt)
      throw validation_error("identity does not act trivially at point " + std::to_string(pt));
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        if (x.act(g.mul(a, b), pt) != x.act(a, x.act(b, pt)))
          throw validation_error("action does not respect the group table at (g=" +
                                 std::to_string(a) + ", h=" + std::to_string(b) +
                                 ", x=" + std::to_string(pt) + ")");
  }
  return x;
}

GSet point_gset(GroupPtr group) {
  std::vector<std::vector<int>> action(1, std::vector<int>(group->order, 0));
  return gset_from_action(std::move(group), std::move(action), "pt");
}

GSet empty_gset(GroupPtr group) {
  GSet x;
  x.group = std::move(group);
  x.size = 0;
  x.label = "empty";
  return x;
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  if (x.group.get() != y.group.get()) throw validation_error("disjoint union needs one group");
  std::vector<std::vector<int>> action;
  action.reserve(x.size + y.size);
  for (int pt = 0; pt < x.size; ++pt) action.push_back(x.action[pt]);
  for (int pt = 0; pt < y.size; ++pt) {
    std::vector<int> row(y.action[pt]);
    for (int& v : row) v += x.size;
    action.push_back(std::move(row));
  }
  return gset_from_action(x.group, std::move(action), x.label + "+" + y.label);
}

GSet product_gset(const GSet& x, const GSet& y) {
  if (x.group.get() != y.group.get()) throw validation_error("product needs one group");
  const int n = x.group->order;
  std::vector<std::vector<int>> action(static_cast<size_t>(x.size) * y.size,
                                       std::vector<int>(n));
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < y.size; ++b)
      for (int g = 0; g < n; ++g)
        action[a * y.size + b][g] = x.act(g, a) * y.size + y.act(g, b);
  return gset_from_action(x.group, std::move(action), x.label + "x" + y.label);
}

CosetSpace coset_space(const Subgroup& h) {
  const auto& g = *h.parent;
  std::vector<int> coset_min(g.order, -1); // element -> smallest member of its coset
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_min[x] >= 0) continue;
    reps.push_back(x);
    for (int a : h.elements) coset_min[g.mul(x, a)] = x;
  }
  std::sort(reps.begin(), reps.end());
  std::map<int, int> point_of;
  for (size_t i = 0; i < reps.size(); ++i) point_of[reps[i]] = static_cast<int>(i);

  CosetSpace out;
  std::vector<std::vector<int>> action(reps.size(), std::vector<int>(g.order));
  for (size_t i = 0; i < reps.size(); ++i)
    for (int a = 0; a < g.order; ++a)
      action[i][a] = point_of.at(coset_min[g.mul(a, reps[i])]);
  out.set = gset_from_action(h.parent, std::move(action),
                             g.label + "/H" + std::to_string(h.order()));
  out.reps = reps;
  out.identity_point = point_of.at(coset_min[g.identity]);
  return out;
}

Subgroup point_stabilizer(const GSet& x, int point) {
  std::vector<int> elems;
  for (int g = 0; g < x.group->order; ++g)
    if (x.act(g, point) == point) elems.push_back(g);
  return Subgroup{x.group, std::move(elems)};
}

std::vector<Orbit> orbit_decompose(const GSet& x) {
  std::vector<char> seen(x.size, 0);
  std::vector<Orbit> out;
  long long total = 0;
  for (int pt = 0; pt < x.size; ++pt) {
    if (seen[pt]) continue;
    int orbit_size = 0;
    for (int g = 0; g < x.group->order; ++g) {
      int img = x.act(g, pt);
      if (!seen[img]) {
        seen[img] = 1;
        ++orbit_size;
      }
    }
    out.push_back({point_stabilizer(x, pt), pt});
    total += orbit_size;
    if (orbit_size * out.back().stabilizer.order() != x.group->order)
      throw check_error("orbit-stabilizer mismatch in " + x.label);
  }
  if (total != x.size) throw check_error("orbits do not partition the set");
  return out;
}

std::vector<long long> marks_vector(const GSet& x, const SubgroupLattice& lattice) {
  if (lattice.group.get() != x.group.get())
    throw validation_error("marks_vector lattice group mismatch");
  std::vector<long long> marks(lattice.num_classes(), 0);
  for (int c = 0; c < lattice.num_classes(); ++c) {
    const auto& h = lattice.subgroups[lattice.class_reps[c]];
    long long fixed = 0;
    for (int pt = 0; pt < x.size; ++pt) {
      bool all = true;
      for (int a : h.elements)
        if (x.act(a, pt) != pt) {
          all = false;
          break;
        }
      if (all) ++fixed;
    }
    marks[c] = fixed;
  }
  return marks;
}

bool gsets_isomorphic(const GSet& x, const GSet& y, const SubgroupLattice& lattice) {
  if (x.group.get() != y.group.get() || x.size != y.size) return false;
  return marks_vector(x, lattice) == marks_vector(y, lattice);
}

GMap gmap(GSet src, GSet dst, std::vector<int> image) {
  if (static_cast<int>(image.size()) != src.size)
    throw validation_error("map image must cover the source");
  for (int v : image)
    if (v < 0 || v >= dst.size) throw validation_error("map image out of range");
  if (src.group.get() != dst.group.get()) throw validation_error("equivariant map needs one group");
  const auto& g = *src.group;
  for (int a = 0; a < g.order; ++a)
    for (int pt = 0; pt < src.size; ++pt)
      if (image[src.act(a, pt)] != dst.act(a, image[pt]))
        throw validation_error("map is not equivariant at (g=" + std::to_string(a) +
                               ", x=" + std::to_string(pt) + ")");
  return GMap{std::move(src), std::move(dst), std::move(image)};
}

PullbackResult pullback(const GMap& f, const GMap& g) {
  if (!(f.dst == g.dst)) throw validation_error("pullback needs a common codomain");
  PullbackResult out;
  for (int x = 0; x < f.src.size; ++x)
    for (int y = 0; y < g.src.size; ++y)
      if (f.image[x] == g.image[y]) out.points.emplace_back(x, y);
  const int n = f.src.group->order;
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < out.points.size(); ++i) index[out.points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> action(out.points.size(), std::vector<int>(n));
  std::vector<int> left(out.points.size()), right(out.points.size());
  for (size_t i = 0; i < out.points.size(); ++i) {
    auto [x, y] = out.points[i];
    left[i] = x;
    right[i] = y;
    for (int a = 0; a < n; ++a)
      action[i][a] = index.at({f.src.act(a, x), g.src.act(a, y)});
  }
  out.set = gset_from_action(f.src.group, std::move(action), "pullback");
  out.to_left = gmap(out.set, f.src, std::move(left));
  out.to_right = gmap(out.set, g.src, std::move(right));
  return out;
}

} // namespace twmack
