#pragma once
// Rooted planar maps as dart rotation systems.
//
// Darts are integers 0..n_darts-1. The edge involution is normalized to
// alpha(d) = d ^ 1, so edge i owns darts 2i and 2i+1 (a general involution is
// accepted on input and relabeled on load). sigma maps a dart to the next
// dart counterclockwise around its origin vertex. Faces are the orbits of
// phi = sigma . alpha; the orbit of d is the face to the RIGHT of d, so the
// external face (the face to the left of the root edge) is the phi-orbit of
// alpha(root_dart).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipolar_lab {

using Dart = int32_t;

enum class Err {
  NotInvolution,
  NotPermutation,
  Disconnected,
  PositiveGenus,
  SourceSinkViolation,
  VertexRuleViolation,
  FaceRuleViolation,
  RightBoundaryViolation,
  DirectedCycle,
  NotInternalVertex,
  NotBoundaryReaching,
  NotRightInternal,
  NotQuasiTriangulation,
  NotTwoConnected,
  NotThreeOrientation,
  StraightPathStuck,
  RightLengthNotTwo,
  ExternalDegreeTooSmall,
  BoundExceeded,
  InconsistentParameters,
  MalformedTree,
  BadMarking,
  DomainError,
  InternalError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotInvolution: return "NotInvolution";
    case Err::NotPermutation: return "NotPermutation";
    case Err::Disconnected: return "Disconnected";
    case Err::PositiveGenus: return "PositiveGenus";
    case Err::SourceSinkViolation: return "SourceSinkViolation";
    case Err::VertexRuleViolation: return "VertexRuleViolation";
    case Err::FaceRuleViolation: return "FaceRuleViolation";
    case Err::RightBoundaryViolation: return "RightBoundaryViolation";
    case Err::DirectedCycle: return "DirectedCycle";
    case Err::NotInternalVertex: return "NotInternalVertex";
    case Err::NotBoundaryReaching: return "NotBoundaryReaching";
    case Err::NotRightInternal: return "NotRightInternal";
    case Err::NotQuasiTriangulation: return "NotQuasiTriangulation";
    case Err::NotTwoConnected: return "NotTwoConnected";
    case Err::NotThreeOrientation: return "NotThreeOrientation";
    case Err::StraightPathStuck: return "StraightPathStuck";
    case Err::RightLengthNotTwo: return "RightLengthNotTwo";
    case Err::ExternalDegreeTooSmall: return "ExternalDegreeTooSmall";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::InconsistentParameters: return "InconsistentParameters";
    case Err::MalformedTree: return "MalformedTree";
    case Err::BadMarking: return "BadMarking";
    case Err::DomainError: return "DomainError";
    case Err::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class MapError : public std::runtime_error {
 public:
  MapError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) +
                           (what.empty() ? "" : ": " + what)),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what = "") {
  throw MapError(code, what);
}

inline void expect(bool ok, Err code, const std::string& what = "") {
  if (!ok) fail(code, what);
}

// Rotation system + root dart, with alpha(d) = d^1. Stores the raw data of a
// map before structural validation; CombMap wraps a validated one.
struct RawMap {
  std::vector<Dart> sigma;
  Dart root = 0;

  int n_darts() const { return static_cast<int>(sigma.size()); }
  int edge_count() const { return n_darts() / 2; }
};

// Breadth-first dart discovery order over (sigma, alpha) from the root
// dart. Rooted maps are rigid, so this is a canonical relabeling.
inline std::vector<Dart> bfs_dart_order(const std::vector<Dart>& sigma, Dart root) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int32_t> label(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    Dart d = order[i];
    for (Dart nb : {sigma[d], static_cast<Dart>(d ^ 1)}) {
      if (label[nb] < 0) {
        label[nb] = static_cast<int32_t>(order.size());
        order.push_back(nb);
      }
    }
  }
  return order;
}

inline std::vector<int32_t> bfs_dart_labels(const std::vector<Dart>& sigma, Dart root) {
  auto order = bfs_dart_order(sigma, root);
  std::vector<int32_t> label(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) label[order[i]] = i;
  return label;
}

// Canonical relabeling trace; equal strings <=> equal rooted maps. One byte
// per entry when n_darts <= 255, otherwise two bytes little-endian.
inline std::string canonical_code_raw(const std::vector<Dart>& sigma,
                                      Dart root) {
  const int n = static_cast<int>(sigma.size());
  auto order = bfs_dart_order(sigma, root);
  std::vector<int32_t> label(n);
  for (int i = 0; i < n; ++i) label[order[i]] = i;
  std::string code;
  const bool wide = n > 255;
  code.reserve(2 + 2 * n * (wide ? 2 : 1));
  auto put = [&](int32_t x) {
    if (wide) {
      code.push_back(static_cast<char>(x & 0xff));
      code.push_back(static_cast<char>((x >> 8) & 0xff));
    } else {
      code.push_back(static_cast<char>(x & 0xff));
    }
  };
  put(n);
  for (Dart d : order) {
    put(label[sigma[d]]);
    put(label[d ^ 1]);
  }
  return code;
}

// Immutable validated rooted planar map. Vertex and face structure is
// precomputed once; all queries are O(1) or return precomputed lists.
class CombMap {
 public:
  CombMap() = default;

  // Accepts a general fixed-point-free involution alpha; relabels darts so
  // that alpha(d) = d^1 (edge pairs ordered by smallest original dart).
  static CombMap validate(const std::vector<Dart>& alpha,
                          const std::vector<Dart>& sigma, Dart root) {
    const int n = static_cast<int>(alpha.size());
    expect(n > 0 && n % 2 == 0, Err::NotPermutation, "n_darts must be even and positive");
    expect(static_cast<int>(sigma.size()) == n, Err::NotPermutation,
           "alpha and sigma must have equal length");
    expect(root >= 0 && root < n, Err::NotPermutation, "root dart out of range");
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
      expect(sigma[d] >= 0 && sigma[d] < n, Err::NotPermutation, "sigma entry out of range");
      expect(!seen[sigma[d]], Err::NotPermutation, "sigma is not a permutation");
      seen[sigma[d]] = 1;
    }
    for (int d = 0; d < n; ++d) {
      expect(alpha[d] >= 0 && alpha[d] < n, Err::NotInvolution, "alpha entry out of range");
      expect(alpha[d] != d, Err::NotInvolution, "alpha has a fixed point");
      expect(alpha[alpha[d]] == d, Err::NotInvolution, "alpha is not an involution");
    }
    // Relabel to the normalized pairing.
    std::vector<Dart> to_new(n, -1);
    Dart next = 0;
    for (int d = 0; d < n; ++d) {
      if (to_new[d] >= 0) continue;
      to_new[d] = next;
      to_new[alpha[d]] = next + 1;
      next += 2;
    }
    std::vector<Dart> ns(n);
    for (int d = 0; d < n; ++d) ns[to_new[d]] = to_new[sigma[d]];
    return from_rotation(std::move(ns), to_new[root]);
  }

  // Fast path when alpha is already d^1.
  static CombMap from_rotation(std::vector<Dart> sigma, Dart root) {
    CombMap m;
    m.raw_.sigma = std::move(sigma);
    m.raw_.root = root;
    m.build();
    return m;
  }

  static CombMap from_raw(const RawMap& raw) {
    CombMap m;
    m.raw_ = raw;
    m.build();
    return m;
  }

  const RawMap& raw() const { return raw_; }
  int n_darts() const { return raw_.n_darts(); }
  int edge_count() const { return raw_.edge_count(); }
  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  int face_count() const { return static_cast<int>(face_cycles_.size()); }
  Dart root() const { return raw_.root; }

  Dart sigma(Dart d) const { return raw_.sigma[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  static Dart alpha(Dart d) { return d ^ 1; }
  Dart phi(Dart d) const { return raw_.sigma[d ^ 1]; }
  Dart phi_inv(Dart d) const { return sigma_inv_[d] ^ 1; }

  static int edge_of(Dart d) { return d >> 1; }
  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  int head_vertex(Dart d) const { return vertex_of_[d ^ 1]; }

  const std::vector<Dart>& vertex_cycle(int v) const { return vertex_cycles_[v]; }
  const std::vector<Dart>& face_cycle(int f) const { return face_cycles_[f]; }
  int vertex_degree(int v) const { return static_cast<int>(vertex_cycles_[v].size()); }
  int face_degree(int f) const { return static_cast<int>(face_cycles_[f].size()); }

  // Face to the left of the root edge.
  int external_face() const { return face_of_[raw_.root ^ 1]; }
  int external_degree() const { return face_degree(external_face()); }
  bool is_external_vertex(int v) const { return external_vertex_[v]; }
  int internal_vertex_count() const { return internal_vertices_; }
  int internal_face_count() const { return face_count() - 1; }

  // True when the external contour visits pairwise distinct vertices.
  bool contour_simple() const { return contour_simple_; }

  // Loopless, connected, and no single vertex disconnects the graph.
  bool is_two_connected() const {
    const int V = vertex_count();
    for (int e = 0; e < edge_count(); ++e)
      if (vertex_of_[2 * e] == vertex_of_[2 * e + 1]) return false;  // loop
    if (V <= 2) return true;
    std::vector<int> stack, comp(V);
    for (int cut = 0; cut < V; ++cut) {
      std::fill(comp.begin(), comp.end(), 0);
      comp[cut] = 1;
      int start = cut == 0 ? 1 : 0;
      stack.assign(1, start);
      comp[start] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (Dart d : vertex_cycles_[v]) {
          int w = vertex_of_[d ^ 1];
          if (!comp[w]) {
            comp[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != V - 1) return false;
    }
    return true;
  }

  bool is_simple_graph() const {
    std::vector<std::pair<int, int>> ends;
    ends.reserve(edge_count());
    for (int e = 0; e < edge_count(); ++e) {
      int a = vertex_of_[2 * e], b = vertex_of_[2 * e + 1];
      if (a == b) return false;
      ends.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
  }

  std::vector<std::pair<int, int>> face_degrees() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(face_count());
    for (int f = 0; f < face_count(); ++f) out.emplace_back(f, face_degree(f));
    return out;
  }

  std::string canonical_code() const { return canonical_code_raw(raw_.sigma, raw_.root); }

 private:
  void build() {
    const int n = raw_.n_darts();
    expect(n > 0 && n % 2 == 0, Err::NotPermutation, "n_darts must be even and positive");
    expect(raw_.root >= 0 && raw_.root < n, Err::NotPermutation, "root dart out of range");
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
      Dart s = raw_.sigma[d];
      expect(s >= 0 && s < n, Err::NotPermutation, "sigma entry out of range");
      expect(!seen[s], Err::NotPermutation, "sigma is not a permutation");
      seen[s] = 1;
    }
    sigma_inv_.assign(n, 0);
    for (int d = 0; d < n; ++d) sigma_inv_[raw_.sigma[d]] = d;

    vertex_of_.assign(n, -1);
    vertex_cycles_.clear();
    for (int d = 0; d < n; ++d) {
      if (vertex_of_[d] >= 0) continue;
      int v = static_cast<int>(vertex_cycles_.size());
      vertex_cycles_.emplace_back();
      Dart cur = d;
      do {
        vertex_of_[cur] = v;
        vertex_cycles_.back().push_back(cur);
        cur = raw_.sigma[cur];
      } while (cur != d);
    }

    // Connectivity: the group generated by sigma and alpha must act
    // transitively on darts.
    {
      std::vector<char> vis(n, 0);
      std::vector<Dart> stack{0};
      vis[0] = 1;
      int cnt = 1;
      while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (Dart nb : {raw_.sigma[d], static_cast<Dart>(d ^ 1)}) {
          if (!vis[nb]) {
            vis[nb] = 1;
            ++cnt;
            stack.push_back(nb);
          }
        }
      }
      expect(cnt == n, Err::Disconnected, "map is not connected");
    }

    face_of_.assign(n, -1);
    face_cycles_.clear();
    for (int d = 0; d < n; ++d) {
      if (face_of_[d] >= 0) continue;
      int f = static_cast<int>(face_cycles_.size());
      face_cycles_.emplace_back();
      Dart cur = d;
      do {
        face_of_[cur] = f;
        face_cycles_.back().push_back(cur);
        cur = phi(cur);
      } while (cur != d);
    }

    const int V = vertex_count(), E = edge_count(), F = face_count();
    expect(V - E + F == 2, Err::PositiveGenus, "Euler characteristic is not 2");

    external_vertex_.assign(V, 0);
    for (Dart d : face_cycles_[external_face()]) external_vertex_[vertex_of_[d]] = 1;
    internal_vertices_ = 0;
    for (int v = 0; v < V; ++v)
      if (!external_vertex_[v]) ++internal_vertices_;
    {
      const auto& ext = face_cycles_[external_face()];
      std::vector<int> vs;
      vs.reserve(ext.size());
      for (Dart d : ext) vs.push_back(vertex_of_[d]);
      std::sort(vs.begin(), vs.end());
      contour_simple_ = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    }
  }

  RawMap raw_;
  std::vector<Dart> sigma_inv_;
  std::vector<int32_t> vertex_of_, face_of_;
  std::vector<std::vector<Dart>> vertex_cycles_, face_cycles_;
  std::vector<char> external_vertex_;
  int internal_vertices_ = 0;
  bool contour_simple_ = false;
};

// Mutable rotation-system editor used by the map surgeries. Cycles are
// rewritten wholesale; finish() revalidates.
struct MapBuilder {
  std::vector<Dart> sigma;
  Dart root;

  explicit MapBuilder(const CombMap& m) : sigma(m.raw().sigma), root(m.root()) {}

  // Darts strictly between a and b counterclockwise around their common
  // vertex: sigma(a), sigma^2(a), ..., up to but excluding b.
  static std::vector<Dart> arc_between(const CombMap& m, Dart a, Dart b) {
    std::vector<Dart> out;
    Dart cur = m.sigma(a);
    int guard = m.n_darts() + 1;
    while (cur != b) {
      out.push_back(cur);
      cur = m.sigma(cur);
      expect(--guard > 0, Err::InternalError, "arc does not close at vertex");
    }
    return out;
  }

  void write_cycle(const std::vector<Dart>& cycle) {
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) sigma[cycle[i]] = cycle[(i + 1) % k];
  }

  // Appends a fresh edge; returns its even dart. The two new darts are left
  // unattached (caller must splice them into rotations).
  Dart add_edge() {
    Dart d = static_cast<Dart>(sigma.size());
    sigma.push_back(d);
    sigma.push_back(static_cast<Dart>(d + 1));
    return d;
  }

  // Inserts dart x immediately after a in the rotation of a's vertex.
  void insert_after(Dart a, Dart x) {
    sigma[x] = sigma[a];
    sigma[a] = x;
  }

  // Removes dart d from its rotation (d must not be alone at its vertex).
  void unlink(Dart d) {
    Dart prev = d;
    int guard = static_cast<int>(sigma.size()) + 1;
    while (sigma[prev] != d) {
      prev = sigma[prev];
      expect(--guard > 0, Err::InternalError, "unlink: dart not in a cycle");
    }
    expect(prev != d, Err::InternalError, "unlink: dart is alone at its vertex");
    sigma[prev] = sigma[d];
    sigma[d] = d;
  }

  // Deletes edge e (both darts must already be unlinked) and compacts dart
  // ids by moving the last edge into the hole. Returns the dart relabeling
  // (old -> new, -1 for deleted darts).
  std::vector<Dart> remove_edge_compact(int e) {
    const int n = static_cast<int>(sigma.size());
    Dart a = 2 * e, b = 2 * e + 1;
    expect(sigma[a] == a && sigma[b] == b, Err::InternalError,
           "remove_edge_compact: darts still linked");
    expect(root != a && root != b, Err::InternalError, "cannot delete the root edge");
    const int last = n / 2 - 1;
    std::vector<Dart> remap(n);
    for (int d = 0; d < n; ++d) remap[d] = d;
    remap[a] = remap[b] = -1;
    if (e != last) {
      remap[2 * last] = a;
      remap[2 * last + 1] = b;
    }
    std::vector<Dart> ns(n - 2);
    for (int d = 0; d < n; ++d) {
      if (remap[d] < 0) continue;
      ns[remap[d]] = remap[sigma[d]];
    }
    sigma = std::move(ns);
    root = remap[root];
    return remap;
  }

  // Deletes every flagged edge (their darts must already be unlinked) and
  // compacts ids, keeping the relative order of surviving edges. Returns the
  // dart relabeling (old -> new, -1 for deleted darts).
  std::vector<Dart> remove_edges_compact(const std::vector<char>& removed) {
    const int n = static_cast<int>(sigma.size());
    std::vector<Dart> remap(n, -1);
    Dart next = 0;
    for (int e = 0; e < n / 2; ++e) {
      if (removed[e]) {
        expect(sigma[2 * e] == 2 * e && sigma[2 * e + 1] == 2 * e + 1, Err::InternalError,
               "remove_edges_compact: darts still linked");
        continue;
      }
      remap[2 * e] = next++;
      remap[2 * e + 1] = next++;
    }
    expect(remap[root] >= 0, Err::InternalError, "cannot delete the root edge");
    std::vector<Dart> ns(next);
    for (int d = 0; d < n; ++d)
      if (remap[d] >= 0) ns[remap[d]] = remap[sigma[d]];
    sigma = std::move(ns);
    root = remap[root];
    return remap;
  }

  CombMap finish() const { return CombMap::from_rotation(sigma, root); }
};

}  // namespace bipolar_lab
