#pragma once
// The rerooting operator on bipolar orientations and its orbits.
//
// One step flips every edge that is not boundary-reaching and moves the root
// to the clockwise-next external edge. Orbits have length a multiple of the
// external degree j, and every edge fails to be boundary-reaching in exactly
// 2|Orb|/j orbit elements.

#include <map>
#include <utility>
#include <vector>

#include "bipolar.hpp"
#include "enumerate.hpp"
#include "map_core.hpp"

namespace bipolar_lab {

inline BipolarMap reroot(const BipolarMap& x) {
  const CombMap& m = x.map();
  expect(m.external_degree() >= 3, Err::ExternalDegreeTooSmall,
         "rerooting needs external degree >= 3");
  Orientation tails = x.tails();
  for (int e = 0; e < m.edge_count(); ++e)
    if (!is_boundary_reaching(x, e)) tails[e] ^= 1;
  Dart new_root = m.sigma_inv(CombMap::alpha(m.root()));
  CombMap rerooted = CombMap::from_rotation(m.raw().sigma, new_root);
  auto out = try_check_bipolar(rerooted, tails);
  expect(out.has_value(), Err::InternalError, "rerooted orientation is not bipolar");
  return std::move(*out);
}

// Directed path from S to the boundary neighbor of N (other than S), taking
// the leftmost incoming edge at every step backwards; returned as tail darts
// in path order. Its edges are exactly the boundary-reaching edges on the
// left hull: an edge is boundary-reaching iff it lies on the path or in the
// region to its right.
inline std::vector<Dart> separating_path(const BipolarMap& x) {
  const CombMap& m = x.map();
  expect(m.external_degree() >= 3, Err::ExternalDegreeTooSmall,
         "separating path needs external degree >= 3");
  auto rho = external_edges_clockwise(m);
  const int vhat = m.vertex_of(CombMap::alpha(rho[1]));
  std::vector<Dart> rev;
  int cur = vhat;
  int guard = m.edge_count() + 1;
  while (cur != x.south()) {
    Dart leftmost_in = -1;
    for (Dart d : m.vertex_cycle(cur)) {
      if (!x.is_out(d) && x.is_out(m.sigma_inv(d))) {
        leftmost_in = d;
        break;
      }
    }
    expect(leftmost_in >= 0, Err::InternalError, "no leftmost incoming dart");
    rev.push_back(CombMap::alpha(leftmost_in));
    cur = m.vertex_of(CombMap::alpha(leftmost_in));
    expect(--guard > 0, Err::InternalError, "separating path does not terminate");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Faces strictly to the right of a directed path given by tail darts:
// flood-fill from the faces right of the path edges, never crossing a path
// edge and never entering the external face.
inline std::vector<char> faces_right_of_path(const CombMap& m,
                                             const std::vector<Dart>& path_darts) {
  std::vector<char> on_path(m.edge_count(), 0);
  for (Dart d : path_darts) on_path[CombMap::edge_of(d)] = 1;
  std::vector<char> region(m.face_count(), 0);
  const int ext = m.external_face();
  std::vector<int> stack;
  for (Dart d : path_darts) {
    int f = m.face_of(d);
    if (f != ext && !region[f]) {
      region[f] = 1;
      stack.push_back(f);
    }
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (Dart z : m.face_cycle(f)) {
      if (on_path[CombMap::edge_of(z)]) continue;
      int g = m.face_of(CombMap::alpha(z));
      if (g != ext && !region[g]) {
        region[g] = 1;
        stack.push_back(g);
      }
    }
  }
  return region;
}

struct Orbit {
  std::vector<BipolarMap> elements;
  int length() const { return static_cast<int>(elements.size()); }
};

inline Orbit orbit_of(const BipolarMap& start) {
  Orbit orb;
  orb.elements.push_back(start);
  long guard = static_cast<long>(start.map().external_degree())
               << std::min(40, start.map().edge_count());
  BipolarMap cur = reroot(start);
  while (!cur.same_state(start)) {
    orb.elements.push_back(cur);
    cur = reroot(cur);
    expect(--guard > 0, Err::InternalError, "orbit does not close");
  }
  return orb;
}

// Number of orbit elements in which edge e is not boundary-reaching (i.e. is
// flipped when stepping to the next element).
inline long multiplicity(const Orbit& orb, int e) {
  long c = 0;
  for (const BipolarMap& x : orb.elements)
    if (!is_boundary_reaching(x, e)) ++c;
  return c;
}

struct OrientationFamily {
  CombMap base;                                   // rooted at rho_0
  std::vector<Dart> rho;                          // external edges clockwise
  std::vector<std::vector<BipolarMap>> by_root;   // orientations rooted at rho_i

  long total() const {
    long t = 0;
    for (const auto& v : by_root) t += static_cast<long>(v.size());
    return t;
  }
  std::vector<BipolarMap> all() const {
    std::vector<BipolarMap> out;
    for (const auto& v : by_root) out.insert(out.end(), v.begin(), v.end());
    return out;
  }
};

inline OrientationFamily orientation_family(const CombMap& m) {
  expect(m.is_two_connected(), Err::NotTwoConnected,
         "bipolar orientations exist only on 2-connected maps");
  OrientationFamily fam{m, external_edges_clockwise(m), {}};
  for (Dart r : fam.rho) {
    CombMap rooted = CombMap::from_rotation(m.raw().sigma, r);
    fam.by_root.push_back(enum_bipolar(rooted));
  }
  return fam;
}

inline std::vector<Orbit> partition_into_orbits(const OrientationFamily& fam) {
  expect(static_cast<int>(fam.rho.size()) >= 3, Err::ExternalDegreeTooSmall,
         "orbit partition needs external degree >= 3");
  std::map<std::pair<Dart, Orientation>, char> visited;
  std::vector<Orbit> orbits;
  for (const auto& group : fam.by_root) {
    for (const BipolarMap& x : group) {
      auto key = std::make_pair(x.map().root(), x.tails());
      if (visited.count(key)) continue;
      Orbit orb = orbit_of(x);
      for (const BipolarMap& y : orb.elements)
        visited[{y.map().root(), y.tails()}] = 1;
      orbits.push_back(std::move(orb));
    }
  }
  return orbits;
}

}  // namespace bipolar_lab
