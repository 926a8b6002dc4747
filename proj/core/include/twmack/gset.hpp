#pragma once

#include <string>
#include <vector>

#include "twmack/group.hpp"

namespace twmack {

/// A finite left G-set: action[x][g] = g.x. The identity must act trivially
/// and the action must respect the group table (checked at construction).
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<std::vector<int>> action;
  std::string label;

  int act(int g, int x) const { return action[x][g]; }
  bool operator==(const GSet& o) const {
    return group.get() == o.group.get() && size == o.size && action == o.action;
  }
};

GSet gset_from_action(GroupPtr group, std::vector<std::vector<int>> action,
                      std::string label = "");
GSet point_gset(GroupPtr group);
GSet empty_gset(GroupPtr group);
GSet disjoint_union(const GSet& x, const GSet& y);
/// Pair (x, y) encoded as x*|Y| + y, diagonal action.
GSet product_gset(const GSet& x, const GSet& y);

/// Left cosets gH of the parent group; point order follows the smallest
/// element of each coset, reps[i] is that smallest element.
struct CosetSpace {
  GSet set;
  std::vector<int> reps;
  int identity_point = 0; // index of the coset eH
};
CosetSpace coset_space(const Subgroup& h);

struct Orbit {
  Subgroup stabilizer;
  int representative = 0;
};
/// One entry per orbit, smallest representative first; the stabilizer is the
/// full point stabilizer of the representative.
std::vector<Orbit> orbit_decompose(const GSet& x);

Subgroup point_stabilizer(const GSet& x, int point);

/// Fixed point counts indexed by the subgroup conjugacy classes of the lattice.
std::vector<long long> marks_vector(const GSet& x, const SubgroupLattice& lattice);

/// Two finite G-sets are isomorphic iff their marks vectors agree; this is the
/// isomorphism test used throughout (no backtracking search).
bool gsets_isomorphic(const GSet& x, const GSet& y, const SubgroupLattice& lattice);

/// An equivariant map of G-sets; equivariance is checked at construction and
/// a violating (g, x) is reported otherwise.
struct GMap {
  GSet src, dst;
  std::vector<int> image;
};
GMap gmap(GSet src, GSet dst, std::vector<int> image);

struct PullbackResult {
  GSet set;
  GMap to_left, to_right;
  std::vector<std::pair<int, int>> points; // (x, y) per pullback point
};
/// {(x,y) : f(x) = g(y)} with the two projections; f and g must share a codomain.
PullbackResult pullback(const GMap& f, const GMap& g);

} // namespace twmack
