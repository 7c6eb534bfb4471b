#pragma once
// Exhaustive desk-scale generation: all rooted planar maps with a given
// number of edges (deduplicated by canonical code), all bipolar orientations
// of a map, and the parameterized classes used by the counting identities.
//
// Generation is level-by-level single-edge insertion. A rooted map with
// E >= 2 edges always has a deletable non-root edge (a non-bridge edge, or a
// pendant edge), and deleting it yields a rooted map with E-1 edges; the two
// insertion moves below invert those deletions, so inserting into every
// corner pair / corner of every smaller map and deduplicating reaches every
// rooted map exactly once per level.

#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "bipolar.hpp"
#include "counting.hpp"
#include "map_core.hpp"

namespace bipolar_lab {

inline int default_emax() {
  if (const char* s = std::getenv("BIPOLAR_LAB_EMAX")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 8;
}

namespace detail {

// All insertions of one edge into `m`, preserving planarity: either a chord
// between two corners of one face, or a pendant edge at a corner. The corner
// after dart d lies in the face of alpha(d).
inline void insertion_children(const CombMap& m, bool forbid_loops,
                               const std::function<void(RawMap&&)>& emit) {
  const int n = m.n_darts();
  const Dart x = static_cast<Dart>(n), y = static_cast<Dart>(n + 1);
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& cyc = m.face_cycle(f);
    std::vector<Dart> corners;
    corners.reserve(cyc.size());
    for (Dart z : cyc) corners.push_back(CombMap::alpha(z));
    for (Dart d1 : corners) {
      for (Dart d2 : corners) {
        if (forbid_loops && m.vertex_of(d1) == m.vertex_of(d2)) continue;
        if (d1 == d2) {
          for (int order = 0; order < 2; ++order) {
            RawMap r{m.raw().sigma, m.root()};
            r.sigma.push_back(0);
            r.sigma.push_back(0);
            Dart first = order ? y : x, second = order ? x : y;
            r.sigma[second] = r.sigma[d1];
            r.sigma[first] = second;
            r.sigma[d1] = first;
            emit(std::move(r));
          }
        } else {
          RawMap r{m.raw().sigma, m.root()};
          r.sigma.push_back(0);
          r.sigma.push_back(0);
          r.sigma[x] = r.sigma[d1];
          r.sigma[d1] = x;
          r.sigma[y] = r.sigma[d2];
          r.sigma[d2] = y;
          emit(std::move(r));
        }
      }
    }
  }
  for (Dart d1 = 0; d1 < n; ++d1) {  // pendant edge at any corner
    RawMap r{m.raw().sigma, m.root()};
    r.sigma.push_back(0);
    r.sigma.push_back(0);
    r.sigma[x] = r.sigma[d1];
    r.sigma[d1] = x;
    r.sigma[y] = y;
    emit(std::move(r));
  }
}

}  // namespace detail

// Streams every rooted planar map with exactly `edges` edges, once, in
// canonical-code order. two_connected additionally filters (and prunes loops
// during generation, which is sound because edge deletion never creates a
// loop).
inline void enum_rooted_maps(int edges, bool two_connected,
                             const std::function<void(const CombMap&)>& yield,
                             int bound = default_emax()) {
  expect(edges >= 1, Err::InconsistentParameters, "need at least one edge");
  expect(edges <= bound, Err::BoundExceeded,
         "edge count exceeds the enumeration bound (set BIPOLAR_LAB_EMAX to raise)");
  const bool forbid_loops = two_connected;
  std::vector<RawMap> level;
  level.push_back(RawMap{{0, 1}, 0});                       // single edge
  if (!forbid_loops) level.push_back(RawMap{{1, 0}, 0});    // loop
  for (int e = 2; e <= edges; ++e) {
    std::vector<std::pair<std::string, RawMap>> next;
    std::unordered_set<std::string> seen;
    for (const RawMap& parent : level) {
      CombMap pm = CombMap::from_raw(parent);
      detail::insertion_children(pm, forbid_loops, [&](RawMap&& r) {
        std::string code = canonical_code_raw(r.sigma, r.root);
        if (seen.insert(code).second) next.emplace_back(std::move(code), std::move(r));
      });
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    level.reserve(next.size());
    for (auto& [code, r] : next) level.push_back(std::move(r));
  }
  if (edges == 1) {
    std::sort(level.begin(), level.end(), [](const RawMap& a, const RawMap& b) {
      return canonical_code_raw(a.sigma, a.root) < canonical_code_raw(b.sigma, b.root);
    });
  }
  for (const RawMap& r : level) {
    CombMap m = CombMap::from_raw(r);
    if (two_connected && !m.is_two_connected()) continue;
    yield(m);
  }
}

inline std::vector<CombMap> enum_rooted_maps_vec(int edges, bool two_connected,
                                                 int bound = default_emax()) {
  std::vector<CombMap> out;
  enum_rooted_maps(edges, two_connected, [&](const CombMap& m) { out.push_back(m); }, bound);
  return out;
}

// Independent oracle: iterate over every rotation permutation on 2E darts
// with the normalized pairing, filter valid planar maps, dedupe by code.
// Only feasible for E <= 4.
inline long count_rooted_maps_bruteforce(int edges, bool two_connected) {
  const int n = 2 * edges;
  std::vector<Dart> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::unordered_set<std::string> codes;
  do {
    RawMap r{perm, 0};
    try {
      CombMap m = CombMap::from_raw(r);
      if (two_connected && !m.is_two_connected()) continue;
      codes.insert(m.canonical_code());
    } catch (const MapError&) {
      continue;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<long>(codes.size());
}

// All bipolar orientations of m rooted at m's root dart.
inline std::vector<BipolarMap> enum_bipolar(const CombMap& m) {
  expect(m.is_two_connected(), Err::NotTwoConnected,
         "bipolar orientations exist only on 2-connected maps");
  const int E = m.edge_count();
  const int root_edge = CombMap::edge_of(m.root());
  const uint8_t root_bit = (m.root() & 1) ? 0 : 1;
  std::vector<BipolarMap> out;
  Orientation tails(E, 0);
  const long masks = 1L << (E - 1);
  for (long mask = 0; mask < masks; ++mask) {
    long bit = 0;
    for (int e = 0; e < E; ++e) {
      if (e == root_edge) {
        tails[e] = root_bit;
      } else {
        tails[e] = (mask >> bit) & 1;
        ++bit;
      }
    }
    if (auto x = try_check_bipolar(m, tails)) out.push_back(std::move(*x));
  }
  return out;
}

// True when the underlying map is a quasi-triangulation: simple external
// contour and all internal faces of degree 3.
inline bool is_quasi_triangulation(const CombMap& m) {
  if (!m.contour_simple()) return false;
  const int ext = m.external_face();
  for (int f = 0; f < m.face_count(); ++f)
    if (f != ext && m.face_degree(f) != 3) return false;
  return true;
}

struct ClassFilter {
  enum Kind { T, B, S } kind;
  long k = 0, l = 0, j = 0;

  long edge_count() const {
    switch (kind) {
      case T: return edges_T(k, j);
      case B: return edges_B(k, l, j);
      case S: return edges_S(k, j);
    }
    return 0;
  }

  void validate() const {
    switch (kind) {
      case T:
        expect(k >= 0 && j >= 2, Err::InconsistentParameters, "T needs k >= 0, j >= 2");
        return;
      case B:
        expect(k >= 0 && l >= 1 && j >= 2, Err::InconsistentParameters,
               "B needs k >= 0, l >= 1, j >= 2");
        return;
      case S:
        expect(k >= 0 && j >= 3, Err::InconsistentParameters, "S needs k >= 0, j >= 3");
        return;
    }
  }

  bool matches(const BipolarMap& x) const {
    const CombMap& m = x.map();
    switch (kind) {
      case T:
        return is_quasi_triangulation(m) && m.internal_vertex_count() == k &&
               m.external_degree() == j;
      case B:
        return m.internal_vertex_count() == k && m.internal_face_count() == l &&
               m.external_degree() == j;
      case S: {
        if (m.internal_vertex_count() != k || m.external_degree() != j) return false;
        const int ext = m.external_face();
        for (int f = 0; f < m.face_count(); ++f)
          if (f != ext && x.right_length(f) != 2) return false;
        return true;
      }
    }
    return false;
  }
};

inline std::vector<BipolarMap> enum_class(const ClassFilter& filter,
                                          int bound = default_emax()) {
  filter.validate();
  const long E = filter.edge_count();
  expect(E >= 1, Err::InconsistentParameters, "class has no edges");
  std::vector<BipolarMap> out;
  enum_rooted_maps(
      static_cast<int>(E), /*two_connected=*/true,
      [&](const CombMap& m) {
        for (BipolarMap& x : enum_bipolar(m))
          if (filter.matches(x)) out.push_back(std::move(x));
      },
      bound);
  return out;
}

struct MarkedVertex {
  BipolarMap x;
  int vertex;
};
struct MarkedEdge {
  BipolarMap x;
  int edge;
};

inline std::vector<MarkedVertex> marked_internal_vertices(const std::vector<BipolarMap>& xs) {
  std::vector<MarkedVertex> out;
  for (const BipolarMap& x : xs)
    for (int v = 0; v < x.map().vertex_count(); ++v)
      if (!x.map().is_external_vertex(v)) out.push_back({x, v});
  return out;
}

enum class EdgeSel {
  Any,                    // every edge
  Internal,               // internal faces on both sides
  RightInternal,          // internal face on the right
  AnyBoundaryReaching,    // boundary-reaching
  InternalBR,             // internal and boundary-reaching
  RightInternalBR,        // right-internal and boundary-reaching
};

inline bool edge_selected(const BipolarMap& x, int e, EdgeSel sel) {
  EdgeClass c = classify_edge(x, e);
  switch (sel) {
    case EdgeSel::Any: return true;
    case EdgeSel::Internal: return c.internal;
    case EdgeSel::RightInternal: return c.right_internal;
    case EdgeSel::AnyBoundaryReaching: return c.boundary_reaching;
    case EdgeSel::InternalBR: return c.internal && c.boundary_reaching;
    case EdgeSel::RightInternalBR: return c.right_internal && c.boundary_reaching;
  }
  return false;
}

inline std::vector<MarkedEdge> marked_edges(const std::vector<BipolarMap>& xs, EdgeSel sel) {
  std::vector<MarkedEdge> out;
  for (const BipolarMap& x : xs)
    for (int e = 0; e < x.map().edge_count(); ++e)
      if (edge_selected(x, e, sel)) out.push_back({x, e});
  return out;
}

}  // namespace bipolar_lab
