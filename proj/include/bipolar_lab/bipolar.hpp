#pragma once
// Bipolar orientations on rooted planar maps.
//
// An orientation is stored as one bit per edge: bit set means the even dart
// is the tail. The root edge must be oriented along the root dart; its tail
// is the South pole, its head the North pole. check_bipolar enforces the
// local rules:
//   - S is a source, N is a sink, S != N;
//   - every other vertex has one nonempty contiguous run of incoming darts
//     and one of outgoing darts in its rotation;
//   - every internal face contour splits into one run of with-orientation
//     darts and one run of against-orientation darts, both nonempty;
//   - on the external face, every dart except alpha(root) is with-orientation
//     (so the right outer boundary is a directed path S -> N);
//   - the orientation is acyclic (implied by the rules, checked anyway).

#include <cstdint>
#include <optional>
#include <vector>

#include "map_core.hpp"

namespace bipolar_lab {

using Orientation = std::vector<uint8_t>;  // per edge: 1 = even dart is tail

class BipolarMap {
 public:
  BipolarMap(CombMap map, Orientation tails)
      : map_(std::move(map)), tails_(std::move(tails)) {
    south_ = map_.vertex_of(map_.root());
    north_ = map_.vertex_of(CombMap::alpha(map_.root()));
  }

  const CombMap& map() const { return map_; }
  const Orientation& tails() const { return tails_; }
  int south() const { return south_; }
  int north() const { return north_; }

  Dart tail_dart(int e) const { return 2 * e + (tails_[e] ? 0 : 1); }
  Dart head_dart(int e) const { return 2 * e + (tails_[e] ? 1 : 0); }
  bool is_out(Dart d) const { return tail_dart(CombMap::edge_of(d)) == d; }
  int edge_tail(int e) const { return map_.vertex_of(tail_dart(e)); }
  int edge_head(int e) const { return map_.vertex_of(head_dart(e)); }

  int external_degree() const { return map_.external_degree(); }

  // Number of darts of face f that run with the orientation: the length of
  // the directed path bounding f on the side that has f on its left.
  int right_length(int f) const {
    int c = 0;
    for (Dart d : map_.face_cycle(f))
      if (!is_out(d)) ++c;
    return c;
  }
  int left_length(int f) const { return map_.face_degree(f) - right_length(f); }

  // Identity of map + orientation + root, for orbit detection and for
  // roundtrip comparisons on a fixed dart labeling.
  bool same_state(const BipolarMap& o) const {
    return map_.root() == o.map_.root() && map_.raw().sigma == o.map_.raw().sigma &&
           tails_ == o.tails_;
  }

  // Canonical over relabeling: map code plus one orientation bit per edge in
  // BFS discovery order, relative to the first-discovered dart of the edge.
  std::string canonical_code() const {
    const auto& sigma = map_.raw().sigma;
    auto order = bfs_dart_order(sigma, map_.root());
    std::string code = canonical_code_raw(sigma, map_.root());
    std::vector<char> seen(map_.edge_count(), 0);
    for (Dart d : order) {
      int e = CombMap::edge_of(d);
      if (seen[e]) continue;
      seen[e] = 1;
      code.push_back(is_out(d) ? '+' : '-');
    }
    return code;
  }

 private:
  CombMap map_;
  Orientation tails_;
  int south_, north_;
};

// Returns the violated rule, or nullopt when (m, tails) is bipolar.
inline std::optional<Err> bipolar_violation(const CombMap& m, const Orientation& tails) {
  if (static_cast<int>(tails.size()) != m.edge_count()) return Err::NotPermutation;
  auto tail_dart = [&](int e) { return 2 * e + (tails[e] ? 0 : 1); };
  auto is_out = [&](Dart d) { return tail_dart(CombMap::edge_of(d)) == d; };

  if (!is_out(m.root())) return Err::SourceSinkViolation;  // root must run along root dart
  const int S = m.vertex_of(m.root());
  const int N = m.vertex_of(CombMap::alpha(m.root()));
  if (S == N) return Err::SourceSinkViolation;
  for (Dart d : m.vertex_cycle(S))
    if (!is_out(d)) return Err::SourceSinkViolation;
  for (Dart d : m.vertex_cycle(N))
    if (is_out(d)) return Err::SourceSinkViolation;

  for (int v = 0; v < m.vertex_count(); ++v) {
    if (v == S || v == N) continue;
    const auto& cyc = m.vertex_cycle(v);
    int transitions = 0;
    for (Dart d : cyc)
      if (is_out(d) != is_out(m.sigma(d))) ++transitions;
    if (transitions != 2) return Err::VertexRuleViolation;
  }

  const int ext = m.external_face();
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == ext) continue;
    const auto& cyc = m.face_cycle(f);
    int transitions = 0, with = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      bool a = is_out(cyc[i]);
      bool b = is_out(cyc[(i + 1) % cyc.size()]);
      if (a) ++with;
      if (a != b) ++transitions;
    }
    if (transitions != 2 || with == 0 || with == static_cast<int>(cyc.size()))
      return Err::FaceRuleViolation;
  }

  for (Dart d : m.face_cycle(ext)) {
    if (d == CombMap::alpha(m.root())) continue;
    if (!is_out(d)) return Err::RightBoundaryViolation;
  }

  // Acyclicity via Kahn's algorithm on vertices.
  std::vector<int> indeg(m.vertex_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e) ++indeg[m.vertex_of(CombMap::alpha(tail_dart(e)))];
  std::vector<int> queue;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (Dart d : m.vertex_cycle(v)) {
      if (!is_out(d)) continue;
      int w = m.vertex_of(CombMap::alpha(d));
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (seen != m.vertex_count()) return Err::DirectedCycle;
  return std::nullopt;
}

inline std::optional<BipolarMap> try_check_bipolar(const CombMap& m, const Orientation& tails,
                                                   Err* why = nullptr) {
  if (auto v = bipolar_violation(m, tails)) {
    if (why) *why = *v;
    return std::nullopt;
  }
  return BipolarMap(m, tails);
}

inline BipolarMap check_bipolar(const CombMap& m, const Orientation& tails) {
  if (auto v = bipolar_violation(m, tails)) fail(*v);
  return BipolarMap(m, tails);
}

struct RightmostPath {
  std::vector<Dart> edge_darts;  // tail darts, in path order
  int internal_len = 0;          // edges strictly before the first qualifying boundary vertex
  int external_index = 0;        // edges strictly after it
  int length() const { return static_cast<int>(edge_darts.size()); }
};

namespace detail {

// First outgoing dart counterclockwise after the incoming group at the head
// of in-dart `arrival` (which points back along the arriving edge).
inline Dart rightmost_out_from(const BipolarMap& x, Dart arrival) {
  const CombMap& m = x.map();
  Dart cur = m.sigma(arrival);
  int guard = m.n_darts() + 1;
  while (!x.is_out(cur)) {
    cur = m.sigma(cur);
    expect(--guard > 0, Err::InternalError, "no outgoing dart at vertex");
  }
  return cur;
}

// Splits a maximal rightmost run of darts into internal part / external
// index per the boundary-reach rule: the first path vertex on the external
// face other than the start vertex and other than N marks the split.
inline void finish_path(const BipolarMap& x, RightmostPath& p) {
  const CombMap& m = x.map();
  const int n_edges = p.length();
  p.internal_len = n_edges;
  p.external_index = 0;
  for (int i = 0; i < n_edges; ++i) {
    int head = m.vertex_of(CombMap::alpha(p.edge_darts[i]));
    if (head != x.north() && m.is_external_vertex(head)) {
      p.internal_len = i + 1;
      p.external_index = n_edges - (i + 1);
      return;
    }
  }
}

}  // namespace detail

// The path that takes the rightmost outgoing edge at every vertex until N.
// From S the first edge is the one with the external face on its right.
inline RightmostPath rightmost_path_from_vertex(const BipolarMap& x, int v) {
  expect(v != x.north(), Err::DomainError, "no rightmost path from N");
  const CombMap& m = x.map();
  RightmostPath p;
  Dart cur;
  if (v == x.south()) {
    cur = m.sigma(m.root());  // boundary edge with the external face on its right
    expect(x.is_out(cur), Err::InternalError, "boundary successor of root not outgoing");
  } else {
    Dart arrival = -1;
    for (Dart d : m.vertex_cycle(v))
      if (!x.is_out(d)) arrival = d;
    expect(arrival >= 0, Err::InternalError, "non-pole vertex with no incoming edge");
    cur = detail::rightmost_out_from(x, arrival);
  }
  int guard = m.edge_count() + 1;
  while (true) {
    p.edge_darts.push_back(cur);
    int head = m.vertex_of(CombMap::alpha(cur));
    if (head == x.north()) break;
    cur = detail::rightmost_out_from(x, CombMap::alpha(cur));
    expect(--guard > 0, Err::InternalError, "rightmost path does not terminate");
  }
  detail::finish_path(x, p);
  return p;
}

inline RightmostPath rightmost_path_from_edge(const BipolarMap& x, int e) {
  const CombMap& m = x.map();
  RightmostPath p;
  Dart cur = x.tail_dart(e);
  int guard = m.edge_count() + 1;
  while (true) {
    p.edge_darts.push_back(cur);
    int head = m.vertex_of(CombMap::alpha(cur));
    if (head == x.north()) break;
    cur = detail::rightmost_out_from(x, CombMap::alpha(cur));
    expect(--guard > 0, Err::InternalError, "rightmost path does not terminate");
  }
  detail::finish_path(x, p);
  return p;
}

inline int external_index_of_edge(const BipolarMap& x, int e) {
  return rightmost_path_from_edge(x, e).external_index;
}

inline bool is_boundary_reaching(const BipolarMap& x, int e) {
  return external_index_of_edge(x, e) > 0;
}

enum class EdgeKind { Root, RightBoundary, Internal };

struct EdgeClass {
  EdgeKind kind;
  bool right_internal;     // face on the right is internal
  bool internal;           // faces on both sides are internal
  bool boundary_reaching;  // rightmost path meets the boundary strictly before N
  int external_index;
};

inline EdgeClass classify_edge(const BipolarMap& x, int e) {
  const CombMap& m = x.map();
  EdgeClass c{};
  const int ext = m.external_face();
  const int right = m.face_of(x.tail_dart(e));
  const int left = m.face_of(x.head_dart(e));
  c.right_internal = right != ext;
  c.internal = right != ext && left != ext;
  c.external_index = external_index_of_edge(x, e);
  c.boundary_reaching = c.external_index > 0;
  if (CombMap::edge_of(m.root()) == e)
    c.kind = EdgeKind::Root;
  else if (right == ext)
    c.kind = EdgeKind::RightBoundary;
  else
    c.kind = EdgeKind::Internal;
  return c;
}

// Oriented external edges rho_0 = root, rho_1, ..., rho_{j-1} in clockwise
// order around the external face, as darts.
inline std::vector<Dart> external_edges_clockwise(const CombMap& m) {
  std::vector<Dart> rho;
  Dart d = m.root();
  do {
    rho.push_back(d);
    d = m.sigma_inv(CombMap::alpha(d));
  } while (d != m.root());
  expect(static_cast<int>(rho.size()) == m.external_degree(), Err::InternalError,
         "clockwise boundary walk does not close after j steps");
  return rho;
}

}  // namespace bipolar_lab
