#pragma once
// Schnyder woods, 3-orientations and quasi-3-orientations, with the
// conversions between them and to/from bipolar oriented maps whose internal
// faces all have right length 2.
//
// Conventions. A triangulation here is a simple map with every face of
// degree 3; the external face (left of the root dart) has vertices rho_2 =
// root tail, rho_3 = root head, rho_1 = the remaining one, so (rho_1, rho_2,
// rho_3) read clockwise. A 3-orientation orients the internal edges with
// outdegree 3 at internal vertices and 0 at the rho_i. A quasi-3-orientation
// of a simple quasi-triangulation orients every non-root edge, with
// outdegree 0 at the root's endpoints, 2 at other external vertices and 3 at
// internal vertices; it is what remains of a 3-orientation after deleting
// rho_1, and conversely.

#include <functional>
#include <optional>
#include <vector>

#include "bipolar.hpp"
#include "enumerate.hpp"
#include "map_core.hpp"
#include "rerooting.hpp"

namespace bipolar_lab {

inline bool is_triangulation(const CombMap& m) {
  if (!m.is_simple_graph()) return false;
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_degree(f) != 3) return false;
  return true;
}

// --- quasi-3-orientations --------------------------------------------------

struct Quasi3Orientation {
  CombMap q;           // simple quasi-triangulation; the root edge is undirected
  Orientation tails;   // root edge bit normalized to the root dart

  int root_edge() const { return CombMap::edge_of(q.root()); }
  bool is_out(Dart d) const {
    if (CombMap::edge_of(d) == root_edge()) return false;
    return 2 * CombMap::edge_of(d) + (tails[CombMap::edge_of(d)] ? 0 : 1) == d;
  }
  int outdeg(int v) const {
    int c = 0;
    for (Dart d : q.vertex_cycle(v))
      if (is_out(d)) ++c;
    return c;
  }
  bool same_state(const Quasi3Orientation& o) const {
    return q.root() == o.q.root() && q.raw().sigma == o.q.raw().sigma && tails == o.tails;
  }

  std::string canonical_code() const {
    auto order = bfs_dart_order(q.raw().sigma, q.root());
    std::string code = canonical_code_raw(q.raw().sigma, q.root());
    std::vector<char> seen(q.edge_count(), 0);
    for (Dart d : order) {
      int e = CombMap::edge_of(d);
      if (seen[e]) continue;
      seen[e] = 1;
      code.push_back(is_out(d) ? '+' : (is_out(CombMap::alpha(d)) ? '-' : 'o'));
    }
    return code;
  }
};

inline std::optional<Err> q3_violation(const CombMap& q, const Orientation& tails) {
  if (!q.is_simple_graph() || !is_quasi_triangulation(q)) return Err::NotQuasiTriangulation;
  if (q.external_degree() < 3) return Err::ExternalDegreeTooSmall;
  Quasi3Orientation y{q, tails};
  const int rho2 = q.vertex_of(q.root());
  const int rho3 = q.vertex_of(CombMap::alpha(q.root()));
  for (int v = 0; v < q.vertex_count(); ++v) {
    int want = q.is_external_vertex(v) ? (v == rho2 || v == rho3 ? 0 : 2) : 3;
    if (y.outdeg(v) != want) return Err::NotThreeOrientation;
  }
  return std::nullopt;
}

inline Quasi3Orientation check_q3(const CombMap& q, Orientation tails) {
  if (auto v = q3_violation(q, tails)) fail(*v);
  // normalize the root edge bit onto the root dart
  tails[CombMap::edge_of(q.root())] = (q.root() & 1) ? 0 : 1;
  return Quasi3Orientation{q, std::move(tails)};
}

// All quasi-3-orientations of q rooted at q's root dart.
inline std::vector<Quasi3Orientation> enum_q3(const CombMap& q) {
  const int E = q.edge_count();
  const int root_edge = CombMap::edge_of(q.root());
  std::vector<Quasi3Orientation> out;
  Orientation tails(E, 0);
  for (long mask = 0; mask < (1L << (E - 1)); ++mask) {
    long bit = 0;
    for (int e = 0; e < E; ++e) {
      if (e == root_edge) continue;
      tails[e] = (mask >> bit) & 1;
      ++bit;
    }
    tails[root_edge] = (q.root() & 1) ? 0 : 1;
    if (!q3_violation(q, tails)) out.push_back(check_q3(q, tails));
  }
  return out;
}

// --- triangulation <-> quasi-triangulation ----------------------------------

struct Triangulation3Orientation {
  CombMap t;          // simple, all faces of degree 3
  Orientation tails;  // bits of the three external edges are unused
  int rho1, rho2, rho3;
};

inline std::optional<Err> t3_violation(const CombMap& t, const Orientation& tails) {
  if (!is_triangulation(t)) return Err::NotQuasiTriangulation;
  const int ext = t.external_face();
  const int rho2 = t.vertex_of(t.root());
  const int rho3 = t.vertex_of(CombMap::alpha(t.root()));
  const int rho1 = t.vertex_of(CombMap::alpha(t.sigma_inv(CombMap::alpha(t.root()))));
  auto is_external_edge = [&](int e) {
    return t.face_of(2 * e) == ext || t.face_of(2 * e + 1) == ext;
  };
  auto is_out = [&](Dart d) {
    int e = CombMap::edge_of(d);
    if (is_external_edge(e)) return false;
    return 2 * e + (tails[e] ? 0 : 1) == d;
  };
  for (int v = 0; v < t.vertex_count(); ++v) {
    int out = 0;
    for (Dart d : t.vertex_cycle(v))
      if (is_out(d)) ++out;
    int want = (v == rho1 || v == rho2 || v == rho3) ? 0 : 3;
    if (out != want) return Err::NotThreeOrientation;
  }
  return std::nullopt;
}

inline Triangulation3Orientation check_t3(const CombMap& t, Orientation tails) {
  if (auto v = t3_violation(t, tails)) fail(*v);
  Triangulation3Orientation w{t, std::move(tails), 0, 0, 0};
  w.rho2 = t.vertex_of(t.root());
  w.rho3 = t.vertex_of(CombMap::alpha(t.root()));
  w.rho1 = t.vertex_of(CombMap::alpha(t.sigma_inv(CombMap::alpha(t.root()))));
  return w;
}

// Delete rho_1 with its incident edges; the 3-orientation restricts to a
// quasi-3-orientation of the result.
inline Quasi3Orientation q3_from_triangulation(const Triangulation3Orientation& w,
                                               std::vector<Dart>* dart_remap = nullptr) {
  const CombMap& t = w.t;
  MapBuilder b(t);
  std::vector<char> removed(t.edge_count(), 0);
  for (Dart d : t.vertex_cycle(w.rho1)) removed[CombMap::edge_of(d)] = 1;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!removed[e]) continue;
    for (Dart d : {static_cast<Dart>(2 * e), static_cast<Dart>(2 * e + 1)})
      if (b.sigma[d] != d) b.unlink(d);
  }
  auto remap = b.remove_edges_compact(removed);
  CombMap q = b.finish();
  Orientation tails(q.edge_count(), 0);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (removed[e]) continue;
    Dart nt = remap[2 * e + (w.tails[e] ? 0 : 1)];
    tails[CombMap::edge_of(nt)] = (nt & 1) ? 0 : 1;
  }
  if (dart_remap) *dart_remap = remap;
  return check_q3(q, tails);
}

// Insert an apex vertex inside the external face, joined to every boundary
// vertex at its external corner, with edges oriented toward the apex from
// the non-pole boundary vertices. Inverse of q3_from_triangulation.
inline Triangulation3Orientation triangulation_from_q3(const Quasi3Orientation& y) {
  const CombMap& q = y.q;
  MapBuilder b(q);
  // Walk the external orbit from alpha(root): corners visited are at
  // S, w_1, ..., w_{j-2}, N in that order.
  std::vector<Dart> walk;
  {
    Dart start = CombMap::alpha(q.root());
    Dart cur = start;
    do {
      walk.push_back(cur);
      cur = q.phi(cur);
    } while (cur != start);
  }
  const int j = static_cast<int>(walk.size());
  std::vector<Dart> fan_tail(j);  // fan dart at the boundary vertex met at corner i
  std::vector<int> corner_vertex(j);
  for (int i = 0; i < j; ++i) {
    Dart z = walk[(i + 1) % j];          // dart leaving the i-th corner
    corner_vertex[i] = q.vertex_of(z);
    Dart nd = b.add_edge();              // even dart at the boundary vertex
    fan_tail[i] = nd;
    b.insert_after(q.sigma_inv(z), nd);  // into the external corner
  }
  // Apex rotation: reverse corner order.
  for (int i = 0; i < j; ++i) {
    Dart cur = static_cast<Dart>(fan_tail[i] + 1);
    Dart nxt = static_cast<Dart>(fan_tail[(i + j - 1) % j] + 1);
    b.sigma[cur] = nxt;
  }
  CombMap t = b.finish();
  expect(is_triangulation(t), Err::InternalError, "apex insertion did not triangulate");
  Orientation tails = y.tails;
  tails.resize(t.edge_count(), 1);  // fan edges run from the boundary to the apex
  return check_t3(t, tails);
}

// --- Schnyder woods ---------------------------------------------------------

struct SchnyderWood {
  CombMap t;
  Orientation tails;           // internal edges only; external bits unused
  std::vector<int8_t> color;   // per edge: 0 = external, 1..3 = tree index
  int rho1, rho2, rho3;
};

// Propagate colors along straight paths: from an internal edge, repeatedly
// leave each internal vertex by the second outgoing dart counterclockwise
// after the arrival, until an external vertex rho_i is reached.
inline SchnyderWood colors_from_3orientation(const CombMap& t, const Orientation& tails) {
  Triangulation3Orientation w = check_t3(t, tails);
  const int ext = t.external_face();
  SchnyderWood wood{t, w.tails, std::vector<int8_t>(t.edge_count(), 0), w.rho1, w.rho2,
                    w.rho3};
  auto is_external_edge = [&](int e) {
    return t.face_of(2 * e) == ext || t.face_of(2 * e + 1) == ext;
  };
  auto is_out = [&](Dart d) {
    int e = CombMap::edge_of(d);
    if (is_external_edge(e)) return false;
    return 2 * e + (tails[e] ? 0 : 1) == d;
  };
  auto color_of_vertex = [&](int v) {
    if (v == w.rho1) return static_cast<int8_t>(1);
    if (v == w.rho2) return static_cast<int8_t>(2);
    if (v == w.rho3) return static_cast<int8_t>(3);
    return static_cast<int8_t>(0);
  };
  for (int e = 0; e < t.edge_count(); ++e) {
    if (is_external_edge(e)) continue;
    Dart cur = 2 * e + (tails[e] ? 0 : 1);
    int guard = 2 * t.edge_count();
    int8_t col = 0;
    while (true) {
      int head = t.vertex_of(CombMap::alpha(cur));
      col = color_of_vertex(head);
      if (col != 0) break;
      // second outgoing dart counterclockwise after arrival
      Dart d = t.sigma(CombMap::alpha(cur));
      int outs = 0;
      int inner_guard = t.n_darts();
      while (true) {
        if (is_out(d)) {
          ++outs;
          if (outs == 2) break;
        }
        d = t.sigma(d);
        expect(--inner_guard > 0, Err::StraightPathStuck, "no straight continuation");
      }
      cur = d;
      expect(--guard > 0, Err::StraightPathStuck, "straight path does not terminate");
    }
    wood.color[e] = col;
  }
  return wood;
}

// Checks the clockwise local rule at a given internal vertex: out-1, in-2*,
// out-3, in-1*, out-2, in-3* read counterclockwise.
inline bool schnyder_local_rule_ok(const SchnyderWood& w, int v) {
  const CombMap& t = w.t;
  auto is_out = [&](Dart d) {
    int e = CombMap::edge_of(d);
    return w.color[e] != 0 && 2 * e + (w.tails[e] ? 0 : 1) == d;
  };
  const auto& cyc = t.vertex_cycle(v);
  const int deg = static_cast<int>(cyc.size());
  int start = -1;
  for (int i = 0; i < deg; ++i)
    if (is_out(cyc[i]) && w.color[CombMap::edge_of(cyc[i])] == 1) start = i;
  if (start < 0) return false;
  std::vector<std::pair<bool, int>> seq;  // (outgoing, color) counterclockwise from out-1
  for (int s = 0; s < deg; ++s) {
    Dart d = cyc[(start + s) % deg];
    seq.emplace_back(is_out(d), w.color[CombMap::edge_of(d)]);
  }
  size_t i = 0;
  auto take_out = [&](int col) {
    if (i >= seq.size() || !seq[i].first || seq[i].second != col) return false;
    ++i;
    return true;
  };
  auto take_ins = [&](int col) {
    while (i < seq.size() && !seq[i].first && seq[i].second == col) ++i;
    return true;
  };
  return take_out(1) && take_ins(2) && take_out(3) && take_ins(1) && take_out(2) &&
         take_ins(3) && i == seq.size();
}

// --- Schnyder wood <-> bipolar map ------------------------------------------

// Remove rho_1 with its incident edges and the rest of tree 1, revert tree 2;
// root at (rho_2 -> rho_3). Internal faces of the result have right length 2.
inline BipolarMap schnyder_to_bipolar(const SchnyderWood& w,
                                      std::vector<Dart>* dart_remap = nullptr) {
  const CombMap& t = w.t;
  std::vector<char> removed(t.edge_count(), 0);
  for (Dart d : t.vertex_cycle(w.rho1)) removed[CombMap::edge_of(d)] = 1;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (w.color[e] == 1) {
      removed[e] = 1;
    } else if (removed[e]) {
      expect(w.color[e] == 0 || w.color[e] == 1, Err::InternalError,
             "edge at rho_1 is neither external nor in tree 1");
    }
  }
  MapBuilder b(t);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!removed[e]) continue;
    for (Dart d : {static_cast<Dart>(2 * e), static_cast<Dart>(2 * e + 1)})
      if (b.sigma[d] != d) b.unlink(d);
  }
  auto remap = b.remove_edges_compact(removed);
  CombMap m = b.finish();
  Orientation tails(m.edge_count(), 0);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (removed[e]) continue;
    Dart old_tail = 2 * e + (w.tails[e] ? 0 : 1);
    if (w.color[e] == 2) old_tail = CombMap::alpha(old_tail);  // revert tree 2
    if (w.color[e] == 0) old_tail = t.root();                  // the root edge, S -> N
    Dart nt = remap[old_tail];
    tails[CombMap::edge_of(nt)] = (nt & 1) ? 0 : 1;
  }
  if (dart_remap) *dart_remap = remap;
  BipolarMap out = check_bipolar(m, tails);
  for (int f = 0; f < m.face_count(); ++f)
    if (f != m.external_face())
      expect(out.right_length(f) == 2, Err::InternalError,
             "image face does not have right length 2");
  return out;
}

// The quasi-3-orientation sharing m's edges: add one fan edge from each
// non-pole vertex into the face right of its rightmost outgoing edge, ending
// at the middle vertex of that face's right lateral path (boundary vertices
// fan into the external face; the apex for them is added by
// triangulation_from_q3). Edge ids of m are preserved.
inline Quasi3Orientation q3_from_bipolar(const BipolarMap& x) {
  const CombMap& m = x.map();
  expect(m.is_simple_graph(), Err::DomainError, "underlying map must be simple");
  const int ext = m.external_face();
  for (int f = 0; f < m.face_count(); ++f)
    if (f != ext)
      expect(x.right_length(f) == 2, Err::RightLengthNotTwo,
             "an internal face does not have right length 2");

  MapBuilder b(m);
  Orientation tails(m.edge_count());
  // Flip each edge that is the leftmost incoming edge at its non-N head.
  std::vector<Dart> leftmost_in(m.vertex_count(), -1), transition_out(m.vertex_count(), -1);
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (v == x.south() || v == x.north()) continue;
    for (Dart d : m.vertex_cycle(v))
      if (x.is_out(d) && !x.is_out(m.sigma(d))) {
        transition_out[v] = d;          // leftmost outgoing
        leftmost_in[v] = m.sigma(d);    // leftmost incoming
      }
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    Dart tail = x.tail_dart(e);
    int head = m.vertex_of(CombMap::alpha(tail));
    bool flip = head != x.north() && leftmost_in[head] == CombMap::alpha(tail);
    tails[e] = ((flip ? CombMap::alpha(tail) : tail) & 1) ? 0 : 1;
  }
  // Fan edges inside each internal face.
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == ext) continue;
    const auto& cyc = m.face_cycle(f);
    // locate the contiguous run of with-orientation darts (the left path)
    int n = static_cast<int>(cyc.size());
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (x.is_out(cyc[i]) && !x.is_out(cyc[(i + n - 1) % n])) start = i;
    expect(start >= 0, Err::InternalError, "face has no lateral split");
    std::vector<Dart> left_path;
    for (int i = 0; i < n && x.is_out(cyc[(start + i) % n]); ++i)
      left_path.push_back(cyc[(start + i) % n]);
    expect(static_cast<int>(left_path.size()) == n - 2, Err::InternalError,
           "right length is not 2");
    Dart mid_in = cyc[(start + n - 1) % n];  // head dart of the lower right edge
    const Dart lo = m.sigma_inv(mid_in);     // leftmost outgoing at the middle vertex
    expect(x.is_out(lo), Err::InternalError, "middle-vertex corner not an out-in seam");
    // one fan edge per interior left-path vertex, bottom-up
    for (size_t i = 0; i + 1 < left_path.size(); ++i) {
      Dart o_i = left_path[i];
      Dart nd = b.add_edge();  // even dart at the source vertex
      b.insert_after(CombMap::alpha(o_i), nd);
      b.insert_after(lo, static_cast<Dart>(nd + 1));
      tails.push_back(1);
    }
  }
  CombMap q = b.finish();
  return check_q3(q, tails);
}

struct Q3Correspondence {
  Quasi3Orientation y;
  Triangulation3Orientation t3;
  SchnyderWood wood;
  BipolarMap m;
  std::vector<Dart> m_dart_to_q_dart;
};

// Rebuild the whole ladder from a quasi-3-orientation: apex triangulation,
// color propagation, then the bipolar map. m's darts are tracked back to q.
inline Q3Correspondence bipolar_from_q3(const Quasi3Orientation& y) {
  Triangulation3Orientation t3 = triangulation_from_q3(y);
  SchnyderWood wood = colors_from_3orientation(t3.t, t3.tails);
  std::vector<Dart> remap;  // t-dart -> m-dart
  BipolarMap m = schnyder_to_bipolar(wood, &remap);
  std::vector<Dart> back(m.map().n_darts(), -1);
  for (Dart d = 0; d < y.q.n_darts(); ++d)
    if (remap[d] >= 0) back[remap[d]] = d;
  for (Dart d : back)
    expect(d >= 0, Err::InternalError, "bipolar edge without a quasi-triangulation twin");
  return Q3Correspondence{y, std::move(t3), std::move(wood), std::move(m), std::move(back)};
}

inline SchnyderWood bipolar_to_schnyder(const BipolarMap& x) {
  Quasi3Orientation y = q3_from_bipolar(x);
  Triangulation3Orientation t3 = triangulation_from_q3(y);
  return colors_from_3orientation(t3.t, t3.tails);
}

// The face of q to the right of a surviving m-edge in the superimposition.
inline int q3_face_right_of_edge(const Q3Correspondence& c, int m_edge) {
  Dart qd = c.m_dart_to_q_dart[c.m.tail_dart(m_edge)];
  return c.y.q.face_of(qd);
}

// --- rerooting on quasi-3-orientations ---------------------------------------

// Directed path from z (the clockwise-next boundary vertex after the root)
// to rho_2, keeping exactly one outgoing edge on its right at every vertex
// it passes through; returned as tail darts in walk order.
inline std::vector<Dart> separating_path_q3(const Quasi3Orientation& y) {
  const CombMap& q = y.q;
  expect(q.external_degree() >= 3, Err::ExternalDegreeTooSmall,
         "rerooting needs external degree >= 3");
  const int rho2 = q.vertex_of(q.root());
  const int rho3 = q.vertex_of(CombMap::alpha(q.root()));
  const Dart rho1_dart = q.sigma_inv(CombMap::alpha(q.root()));
  const int z = q.vertex_of(CombMap::alpha(rho1_dart));
  Dart cur = -1;
  for (Dart d : q.vertex_cycle(z))
    if (y.is_out(d) && q.vertex_of(CombMap::alpha(d)) != rho3) cur = d;
  expect(cur >= 0, Err::InternalError, "no starting edge for the separating path");
  std::vector<Dart> path;
  int guard = q.edge_count() + 1;
  while (true) {
    path.push_back(cur);
    int head = q.vertex_of(CombMap::alpha(cur));
    if (head == rho2) break;
    expect(head != rho3, Err::InternalError, "separating path hit the root head");
    // second outgoing dart counterclockwise after the arrival
    Dart d = q.sigma(CombMap::alpha(cur));
    int outs = 0, inner = q.n_darts();
    while (true) {
      if (y.is_out(d)) {
        ++outs;
        if (outs == 2) break;
      }
      d = q.sigma(d);
      expect(--inner > 0, Err::InternalError, "no straight continuation on the path");
    }
    cur = d;
    expect(--guard > 0, Err::InternalError, "separating path does not terminate");
  }
  return path;
}

// Internal faces strictly right of the separating path.
inline std::vector<char> right_region(const Quasi3Orientation& y) {
  return faces_right_of_path(y.q, separating_path_q3(y));
}

// Revert the separating path, orient the old root out of rho_2, un-orient
// the clockwise-next external edge and root there.
inline Quasi3Orientation reroot_q3(const Quasi3Orientation& y) {
  const CombMap& q = y.q;
  auto path = separating_path_q3(y);
  Orientation tails = y.tails;
  for (Dart d : path) tails[CombMap::edge_of(d)] = (d & 1) ? 1 : 0;  // revert
  tails[CombMap::edge_of(q.root())] = (q.root() & 1) ? 0 : 1;        // rho_2 -> rho_3
  Dart new_root = q.sigma_inv(CombMap::alpha(q.root()));
  CombMap q2 = CombMap::from_rotation(q.raw().sigma, new_root);
  if (auto v = q3_violation(q2, tails)) fail(Err::InternalError, err_name(*v));
  return check_q3(q2, tails);
}

struct Q3Orbit {
  std::vector<Quasi3Orientation> elements;
  int length() const { return static_cast<int>(elements.size()); }
};

inline Q3Orbit orbit_q3(const Quasi3Orientation& start) {
  Q3Orbit orb;
  orb.elements.push_back(start);
  long guard = static_cast<long>(start.q.external_degree())
               << std::min(40, start.q.edge_count());
  Quasi3Orientation cur = reroot_q3(start);
  while (!cur.same_state(start)) {
    orb.elements.push_back(cur);
    cur = reroot_q3(cur);
    expect(--guard > 0, Err::InternalError, "orbit does not close");
  }
  return orb;
}

// Number of orbit elements whose right region contains face f.
inline long face_multiplicity(const Q3Orbit& orb, int f) {
  long c = 0;
  for (const Quasi3Orientation& y : orb.elements)
    if (right_region(y)[f]) ++c;
  return c;
}

}  // namespace bipolar_lab
