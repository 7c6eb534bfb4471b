#pragma once
// Growth surgeries on bipolar oriented maps.
//
// shrink_at_vertex removes a marked internal vertex by slitting along the
// internal part of its rightmost path, sliding the right side down one unit
// and sewing back; it returns the map with a marked boundary-reaching
// right-internal edge whose external index grew by one. grow_at_edge is the
// inverse surgery (slide up). The *_quasi variants keep quasi-triangulations
// closed under the operations by collapsing the degree-2 face created at the
// marked edge (resp. blowing the marked edge into one first).
//
// Dart-level effect of the downward slide along internal path e_1..e_k from
// v to b0 (o_i = tail darts, n_i = head darts, l0 = the in-dart just
// clockwise of o_1 at v, xhat = b0's dart on the external face):
//   new vertex cycles  A_i = [o_i, L_{i-1}, n_{i-1}, R_i]   (n_0 := l0)
//   where L_i / R_i are the dart arcs strictly left / right of the path at
//   its i-th vertex, and b0 keeps [n_k, xhat, ...rest]. Edge pairs, edge
//   orientations and the root are untouched; only rotations change.

#include <vector>

#include "bipolar.hpp"
#include "enumerate.hpp"
#include "map_core.hpp"

namespace bipolar_lab {

struct ShrinkResult {
  BipolarMap map;
  int marked_edge;
  int delta;  // external index of (map, marked_edge)
};

struct GrowResult {
  BipolarMap map;
  int marked_vertex;
  int delta;  // external index of (map, marked_vertex)
};

inline ShrinkResult shrink_at_vertex(const BipolarMap& x, int v) {
  const CombMap& m = x.map();
  expect(v >= 0 && v < m.vertex_count() && !m.is_external_vertex(v), Err::NotInternalVertex,
         "marked vertex must be internal");
  RightmostPath path = rightmost_path_from_vertex(x, v);
  const int k = path.internal_len;
  expect(k >= 1, Err::InternalError, "internal vertex with empty sliding path");

  auto o = [&](int i) { return path.edge_darts[i - 1]; };          // 1-based tail darts
  auto nn = [&](int i) { return CombMap::alpha(o(i)); };           // head darts
  const Dart o1 = o(1);
  const Dart l0 = m.sigma_inv(o1);
  expect(!x.is_out(l0), Err::InternalError, "dart clockwise of the sliding path is outgoing");
  const Dart xhat =
      path.external_index > 0 ? path.edge_darts[k] : CombMap::alpha(m.root());

  // Arcs are read from the original rotation before any rewrite.
  std::vector<std::vector<Dart>> L(k), R(k + 1);
  L[0] = MapBuilder::arc_between(m, o1, l0);
  for (int i = 1; i < k; ++i) {
    L[i] = MapBuilder::arc_between(m, o(i + 1), nn(i));
    R[i] = MapBuilder::arc_between(m, nn(i), o(i + 1));
  }
  R[k] = MapBuilder::arc_between(m, nn(k), xhat);

  MapBuilder b(m);
  auto cycle = [&](int i) {
    std::vector<Dart> c{o(i)};
    c.insert(c.end(), L[i - 1].begin(), L[i - 1].end());
    c.push_back(i == 1 ? l0 : nn(i - 1));
    c.insert(c.end(), R[i].begin(), R[i].end());
    return c;
  };
  for (int i = 1; i <= k; ++i) b.write_cycle(cycle(i));
  std::vector<Dart> b0_cycle{nn(k), xhat};
  {
    auto rest = MapBuilder::arc_between(m, xhat, nn(k));
    b0_cycle.insert(b0_cycle.end(), rest.begin(), rest.end());
  }
  b.write_cycle(b0_cycle);

  BipolarMap out = check_bipolar(b.finish(), x.tails());
  const int marked = CombMap::edge_of(l0);
  ShrinkResult res{std::move(out), marked, 0};
  res.delta = external_index_of_edge(res.map, marked);
  expect(res.delta == path.external_index + 1, Err::InternalError,
         "external index did not increase by one");
  return res;
}

inline GrowResult grow_at_edge(const BipolarMap& x, int e) {
  const CombMap& m = x.map();
  expect(e >= 0 && e < m.edge_count(), Err::DomainError, "edge out of range");
  EdgeClass c = classify_edge(x, e);
  expect(c.boundary_reaching, Err::NotBoundaryReaching, "marked edge must be boundary-reaching");
  expect(c.right_internal, Err::NotRightInternal, "marked edge must be right-internal");
  RightmostPath path = rightmost_path_from_edge(x, e);
  const int k = path.internal_len;
  expect(k >= 1 && path.external_index >= 1, Err::InternalError, "unexpected path split");

  auto g = [&](int i) { return path.edge_darts[i - 1]; };
  auto hd = [&](int i) { return CombMap::alpha(g(i)); };     // head dart of g_i
  auto next_tail = [&](int i) { return path.edge_darts[i]; };  // tail of g_{i+1}, x1 at i = k

  std::vector<std::vector<Dart>> L(k + 1), R(k + 1);
  for (int i = 1; i <= k; ++i) {
    L[i] = MapBuilder::arc_between(m, next_tail(i), hd(i));
    R[i] = MapBuilder::arc_between(m, hd(i), next_tail(i));
  }
  const Dart ik1 = CombMap::alpha(path.edge_darts[k]);  // head dart of the first external edge

  MapBuilder b(m);
  // Re-made vertex carrying the new internal vertex.
  {
    std::vector<Dart> c{next_tail(1)};
    c.insert(c.end(), L[1].begin(), L[1].end());
    c.push_back(hd(1));
    b.write_cycle(c);
  }
  for (int i = 1; i < k; ++i) {
    std::vector<Dart> c{next_tail(i + 1)};
    c.insert(c.end(), L[i + 1].begin(), L[i + 1].end());
    c.push_back(hd(i + 1));
    c.insert(c.end(), R[i].begin(), R[i].end());
    b.write_cycle(c);
  }
  if (!R[k].empty()) {  // splice the right side of the path back under b0
    Dart after = b.sigma[ik1];
    b.sigma[ik1] = R[k].front();
    for (size_t t = 0; t + 1 < R[k].size(); ++t) b.sigma[R[k][t]] = R[k][t + 1];
    b.sigma[R[k].back()] = after;
  }

  BipolarMap out = check_bipolar(b.finish(), x.tails());
  const int marked_vertex = out.map().vertex_of(hd(1));
  expect(!out.map().is_external_vertex(marked_vertex), Err::InternalError,
         "grown vertex is not internal");
  GrowResult res{std::move(out), marked_vertex, path.external_index - 1};
  RightmostPath check = rightmost_path_from_vertex(res.map, marked_vertex);
  expect(check.external_index == res.delta, Err::InternalError,
         "external index did not decrease by one");
  return res;
}

// --- quasi-triangulation variants ---------------------------------------

// Collapse the degree-2 face to the right of edge `e` by sewing its right
// side onto e. Returns the new map, the merged edge id, and the dart remap.
inline ShrinkResult shrink_at_vertex_quasi(const BipolarMap& x, int v) {
  expect(is_quasi_triangulation(x.map()), Err::NotQuasiTriangulation,
         "input is not a quasi-triangulation");
  ShrinkResult r = shrink_at_vertex(x, v);
  const CombMap& m = r.map.map();
  const Dart t = r.map.tail_dart(r.marked_edge);
  const Dart h = CombMap::alpha(t);
  const int digon = m.face_of(t);
  expect(m.face_degree(digon) == 2, Err::InternalError,
         "face right of the marked edge is not a digon");
  const Dart hh = m.phi(t);  // head dart of the parallel edge
  const int kept = CombMap::edge_of(hh);
  expect(kept != r.marked_edge, Err::InternalError, "digon bounded by one edge");

  MapBuilder b(m);
  b.unlink(t);
  b.unlink(h);
  std::vector<Dart> remap = b.remove_edge_compact(r.marked_edge);
  CombMap m2 = b.finish();
  Orientation tails(m2.edge_count());
  for (int e2 = 0; e2 < m.edge_count(); ++e2) {
    if (e2 == r.marked_edge) continue;
    Dart nt = remap[r.map.tail_dart(e2)];
    tails[CombMap::edge_of(nt)] = (nt & 1) ? 0 : 1;
  }
  BipolarMap out = check_bipolar(m2, tails);
  expect(is_quasi_triangulation(out.map()), Err::InternalError,
         "collapse left a non-triangular internal face");
  int merged = CombMap::edge_of(remap[hh]);
  ShrinkResult res{std::move(out), merged, 0};
  res.delta = external_index_of_edge(res.map, merged);
  expect(res.delta >= 1, Err::InternalError, "merged edge is not boundary-reaching");
  return res;
}

// Blow edge `e` into a degree-2 face (the new parallel copy carries the face
// on its right) and grow there.
inline GrowResult grow_at_edge_quasi(const BipolarMap& x, int e) {
  expect(is_quasi_triangulation(x.map()), Err::NotQuasiTriangulation,
         "input is not a quasi-triangulation");
  expect(e >= 0 && e < x.map().edge_count(), Err::DomainError, "edge out of range");
  expect(is_boundary_reaching(x, e), Err::NotBoundaryReaching,
         "marked edge must be boundary-reaching");
  const CombMap& m = x.map();
  const Dart t_old = x.tail_dart(e);
  const Dart h_old = CombMap::alpha(t_old);
  MapBuilder b(m);
  Dart t_new = b.add_edge();
  Dart h_new = static_cast<Dart>(t_new + 1);
  b.insert_after(t_old, t_new);
  b.insert_after(m.sigma_inv(h_old), h_new);
  Orientation tails = x.tails();
  tails.push_back(1);  // new edge runs tail-even, parallel to e
  CombMap m2 = b.finish();
  BipolarMap blown = check_bipolar(m2, tails);
  const int new_edge = CombMap::edge_of(t_new);
  expect(blown.map().face_degree(blown.map().face_of(t_new)) == 2, Err::InternalError,
         "blown edge does not carry the new digon on its right");
  GrowResult res = grow_at_edge(blown, new_edge);
  expect(is_quasi_triangulation(res.map.map()), Err::InternalError,
         "grow left a non-triangular internal face");
  return res;
}

}  // namespace bipolar_lab
