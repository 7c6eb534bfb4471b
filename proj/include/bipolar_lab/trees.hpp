#pragma once
// Rooted plane trees and full binary trees, with the growth moves used by
// the base-case samplers: Remy leaf insertion, the cut-and-attach involution
// on doubly marked binary trees, the rotation correspondence between plane
// trees and binary trees, and the tree <-> dissection bijections.

#include <functional>
#include <string>
#include <vector>

#include "bipolar.hpp"
#include "map_core.hpp"

namespace bipolar_lab {

// Full binary tree: every node has 0 or 2 children. Edges are identified by
// the vertex below them; the root's edge is the planted stem (it exists for
// Remy growth but is neither a leaf edge nor an inner edge for marking).
struct BinaryTree {
  struct Node {
    int left = -1, right = -1, parent = -1;
    bool right_child = false;  // side of the edge above this node
  };
  std::vector<Node> nodes;
  int root = 0;

  static BinaryTree single_leaf() {
    BinaryTree t;
    t.nodes.emplace_back();
    return t;
  }

  bool is_leaf(int v) const { return nodes[v].left < 0; }
  int node_count() const { return static_cast<int>(nodes.size()); }
  int leaf_count() const {
    int c = 0;
    for (int v = 0; v < node_count(); ++v)
      if (is_leaf(v)) ++c;
    return c;
  }
  int count_leaf_edges(bool right) const {
    int c = 0;
    for (int v = 0; v < node_count(); ++v)
      if (v != root && is_leaf(v) && nodes[v].right_child == right) ++c;
    return c;
  }
  int count_inner_edges(bool right) const {
    int c = 0;
    for (int v = 0; v < node_count(); ++v)
      if (v != root && !is_leaf(v) && nodes[v].right_child == right) ++c;
    return c;
  }
  std::vector<int> leaf_edges(bool right) const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
      if (v != root && is_leaf(v) && nodes[v].right_child == right) out.push_back(v);
    return out;
  }
  std::vector<int> inner_edges(bool right) const {
    std::vector<int> out;
    for (int v = 0; v < node_count(); ++v)
      if (v != root && !is_leaf(v) && nodes[v].right_child == right) out.push_back(v);
    return out;
  }

  bool in_subtree(int v, int anc) const {
    while (v >= 0) {
      if (v == anc) return true;
      v = nodes[v].parent;
    }
    return false;
  }

  std::string encode() const {  // preorder shape string
    std::string s;
    std::function<void(int)> rec = [&](int v) {
      if (is_leaf(v)) {
        s.push_back('.');
        return;
      }
      s.push_back('(');
      rec(nodes[v].left);
      rec(nodes[v].right);
      s.push_back(')');
    };
    rec(root);
    return s;
  }
};

// Remy growth: insert a new node in the middle of the edge above x and hang
// a fresh leaf on the given side. Inverse of remy_shrink.
inline BinaryTree remy_grow(const BinaryTree& t, int x, bool leaf_on_right) {
  expect(x >= 0 && x < t.node_count(), Err::MalformedTree, "marked edge out of range");
  BinaryTree out = t;
  int mid = out.node_count();
  out.nodes.emplace_back();
  int leaf = out.node_count();
  out.nodes.emplace_back();
  auto& m = out.nodes[mid];
  auto& lf = out.nodes[leaf];
  int p = out.nodes[x].parent;
  m.parent = p;
  m.right_child = out.nodes[x].right_child;
  if (p < 0) {
    out.root = mid;
  } else {
    (out.nodes[x].right_child ? out.nodes[p].right : out.nodes[p].left) = mid;
  }
  lf.parent = mid;
  lf.right_child = leaf_on_right;
  out.nodes[x].parent = mid;
  out.nodes[x].right_child = !leaf_on_right;
  if (leaf_on_right) {
    m.right = leaf;
    m.left = x;
  } else {
    m.left = leaf;
    m.right = x;
  }
  return out;
}

struct RemyShrinkResult {
  BinaryTree tree;
  int edge;    // marked edge of the smaller tree (vertex below it)
  bool right;  // side the removed leaf was on
};

inline RemyShrinkResult remy_shrink(const BinaryTree& t, int leaf) {
  expect(leaf >= 0 && leaf < t.node_count() && t.is_leaf(leaf) && leaf != t.root,
         Err::BadMarking, "marked vertex is not a removable leaf");
  BinaryTree tmp = t;
  const int p = tmp.nodes[leaf].parent;
  const int sib = tmp.nodes[p].left == leaf ? tmp.nodes[p].right : tmp.nodes[p].left;
  const bool removed_side = tmp.nodes[leaf].right_child;
  const int g = tmp.nodes[p].parent;
  tmp.nodes[sib].parent = g;
  tmp.nodes[sib].right_child = tmp.nodes[p].right_child;
  if (g < 0) {
    tmp.root = sib;
  } else {
    (tmp.nodes[p].right_child ? tmp.nodes[g].right : tmp.nodes[g].left) = sib;
  }
  // Compact ids, dropping p and the removed leaf.
  const int n = tmp.node_count();
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (v != p && v != leaf) remap[v] = next++;
  BinaryTree out;
  out.nodes.resize(n - 2);
  for (int v = 0; v < n; ++v) {
    if (remap[v] < 0) continue;
    BinaryTree::Node nd = tmp.nodes[v];
    nd.parent = nd.parent < 0 ? -1 : remap[nd.parent];
    nd.left = nd.left < 0 ? -1 : remap[nd.left];
    nd.right = nd.right < 0 ? -1 : remap[nd.right];
    out.nodes[remap[v]] = nd;
  }
  out.root = remap[tmp.root];
  return {std::move(out), remap[sib], removed_side};
}

struct ChiResult {
  BinaryTree tree;
  int leaf_edge;   // new marked leaf edge (vertex below it)
  int inner_edge;  // new marked inner edge (vertex below it)
};

// Cut the marked inner edge and attach the detached component to the marked
// leaf edge. An involution on doubly marked trees; the mark types swap, so a
// (left leaf, right inner) marking becomes a (right leaf, left inner) one.
inline ChiResult cut_and_attach(const BinaryTree& t, int leaf, int inner) {
  expect(leaf >= 0 && leaf < t.node_count() && t.is_leaf(leaf) && leaf != t.root,
         Err::BadMarking, "marked leaf edge is not a leaf edge");
  expect(inner >= 0 && inner < t.node_count() && !t.is_leaf(inner) && inner != t.root,
         Err::BadMarking, "marked inner edge is not an inner edge");
  expect(t.nodes[leaf].right_child != t.nodes[inner].right_child, Err::BadMarking,
         "marks must have opposite types");
  BinaryTree out = t;
  const int pc = t.nodes[inner].parent;
  const bool slot_c = t.nodes[inner].right_child;
  const int pl = t.nodes[leaf].parent;
  const bool slot_l = t.nodes[leaf].right_child;
  const bool leaf_below = t.in_subtree(leaf, inner);
  const int yroot = leaf_below ? t.root : inner;
  const int newroot = leaf_below ? inner : t.root;
  // Stub the cut slot with the old marked leaf.
  (slot_c ? out.nodes[pc].right : out.nodes[pc].left) = leaf;
  out.nodes[leaf].parent = pc;
  out.nodes[leaf].right_child = slot_c;
  // Attach the detached component where the marked leaf was.
  (slot_l ? out.nodes[pl].right : out.nodes[pl].left) = yroot;
  out.nodes[yroot].parent = pl;
  out.nodes[yroot].right_child = slot_l;
  out.root = newroot;
  out.nodes[newroot].parent = -1;
  return {std::move(out), leaf, yroot};
}

// Rooted plane tree; node 0 need not be the root.
struct PlaneTree {
  struct Node {
    std::vector<int> children;
    int parent = -1;
  };
  std::vector<Node> nodes;
  int root = 0;

  bool is_leaf(int v) const { return nodes[v].children.empty(); }
  int node_count() const { return static_cast<int>(nodes.size()); }
  int internal_count() const {
    int c = 0;
    for (int v = 0; v < node_count(); ++v)
      if (!is_leaf(v)) ++c;
    return c;
  }
  int leaf_count() const { return node_count() - internal_count(); }

  std::string encode() const {
    std::string s;
    std::function<void(int)> rec = [&](int v) {
      s.push_back('(');
      for (int c : nodes[v].children) rec(c);
      s.push_back(')');
    };
    rec(root);
    return s;
  }
};

// Rotation correspondence, mirrored so that a plane tree with a internal
// nodes and b leaves maps to a full binary tree with a left and b right leaf
// edges: for each non-root vertex, its first child hangs on the right and
// its next sibling hangs on the left; empty slots become leaves.
inline BinaryTree binary_from_plane(const PlaneTree& p) {
  expect(!p.is_leaf(p.root), Err::MalformedTree, "plane tree root must have a child");
  BinaryTree b;
  // One binary node per non-root plane vertex, plus fresh leaves for empty slots.
  std::vector<int> id(p.node_count(), -1);
  for (int v = 0; v < p.node_count(); ++v) {
    if (v == p.root) continue;
    id[v] = b.node_count();
    b.nodes.emplace_back();
  }
  auto fresh_leaf = [&](int parent, bool right) {
    int v = b.node_count();
    b.nodes.emplace_back();
    b.nodes[v].parent = parent;
    b.nodes[v].right_child = right;
    (right ? b.nodes[parent].right : b.nodes[parent].left) = v;
    return v;
  };
  auto attach = [&](int child_plane, int parent_bin, bool right) {
    int c = id[child_plane];
    b.nodes[c].parent = parent_bin;
    b.nodes[c].right_child = right;
    if (parent_bin >= 0) (right ? b.nodes[parent_bin].right : b.nodes[parent_bin].left) = c;
  };
  for (int v = 0; v < p.node_count(); ++v) {
    if (v == p.root) continue;
    int bv = id[v];
    const auto& kids = p.nodes[v].children;
    if (kids.empty())
      fresh_leaf(bv, true);
    else
      attach(kids[0], bv, true);
    // next sibling
    int par = p.nodes[v].parent;
    const auto& sibs = p.nodes[par].children;
    size_t pos = 0;
    while (sibs[pos] != v) ++pos;
    if (pos + 1 < sibs.size())
      attach(sibs[pos + 1], bv, false);
    else
      fresh_leaf(bv, false);
  }
  b.root = id[p.nodes[p.root].children[0]];
  b.nodes[b.root].parent = -1;
  return b;
}

inline PlaneTree plane_from_binary(const BinaryTree& b) {
  PlaneTree p;
  p.nodes.emplace_back();  // root
  p.root = 0;
  // Each internal binary node becomes a plane vertex; right chains list the
  // first child, left chains list siblings.
  std::function<void(int, int)> attach_chain = [&](int bv, int parent_plane) {
    // bv heads a sibling chain (following left children).
    while (!b.is_leaf(bv)) {
      int v = p.node_count();
      p.nodes.emplace_back();
      p.nodes[v].parent = parent_plane;
      p.nodes[parent_plane].children.push_back(v);
      int first_child = b.nodes[bv].right;
      if (!b.is_leaf(first_child)) attach_chain(first_child, v);
      bv = b.nodes[bv].left;
    }
  };
  expect(!b.is_leaf(b.root), Err::MalformedTree,
         "single-leaf binary tree has no plane-tree image");
  attach_chain(b.root, 0);
  return p;
}

// ---------------------------------------------------------------------------
// Dissection bijections. A dissection is a bipolar oriented map with no
// internal vertices; its internal faces all have left length 1, and the face
// structure is a tree: the face right of the root edge is the tree root, and
// the children of a face are its right lateral edges in order (bottom to
// top), each being either a boundary edge (a leaf) or the left edge of
// another internal face (an internal child).

// Plane tree with a >= 1 internal nodes and b leaves -> the dissection with
// a internal faces and external degree b + 1, with its unique bipolar
// orientation.
inline BipolarMap dissection_from_plane_tree(const PlaneTree& p) {
  expect(!p.is_leaf(p.root), Err::MalformedTree, "tree must have an internal root");
  const int n_edges = p.node_count();  // root edge + one edge per non-root vertex
  std::vector<int> edge_of_vertex(p.node_count(), -1);
  int next_edge = 1;
  std::function<void(int)> assign = [&](int v) {
    for (int c : p.nodes[v].children) {
      edge_of_vertex[c] = next_edge++;
      assign(c);
    }
  };
  assign(p.root);
  expect(next_edge == n_edges, Err::InternalError, "edge assignment mismatch");

  std::vector<Dart> sigma(2 * n_edges, -1);
  auto write_face = [&](const std::vector<Dart>& cycle) {
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) sigma[cycle[i] ^ 1] = cycle[(i + 1) % m];
  };
  // Internal faces: [left edge tail dart, then head darts of the right path,
  // top edge first].
  std::function<void(int, int)> faces = [&](int v, int left_edge) {
    std::vector<Dart> cyc{static_cast<Dart>(2 * left_edge)};
    const auto& kids = p.nodes[v].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
      cyc.push_back(static_cast<Dart>(2 * edge_of_vertex[*it] + 1));
    write_face(cyc);
    for (int c : kids)
      if (!p.is_leaf(c)) faces(c, edge_of_vertex[c]);
  };
  faces(p.root, 0);
  // External face: [head dart of root, tail darts of the leaf edges in
  // depth-first order].
  std::vector<Dart> ext{1};
  std::function<void(int)> leaves = [&](int v) {
    for (int c : p.nodes[v].children) {
      if (p.is_leaf(c))
        ext.push_back(static_cast<Dart>(2 * edge_of_vertex[c]));
      else
        leaves(c);
    }
  };
  leaves(p.root);
  write_face(ext);
  for (Dart d = 0; d < static_cast<Dart>(sigma.size()); ++d)
    expect(sigma[d] >= 0, Err::InternalError, "rotation not fully determined");
  CombMap m = CombMap::from_rotation(std::move(sigma), 0);
  Orientation tails(n_edges, 1);
  BipolarMap x = check_bipolar(m, tails);
  expect(m.internal_vertex_count() == 0, Err::InternalError, "dissection has internal vertices");
  return x;
}

inline PlaneTree plane_tree_from_dissection(const BipolarMap& x) {
  const CombMap& m = x.map();
  expect(m.internal_vertex_count() == 0, Err::MalformedTree, "map has internal vertices");
  const int ext = m.external_face();
  PlaneTree p;
  p.nodes.emplace_back();
  p.root = 0;
  std::function<void(int, int)> rec = [&](int face, int tree_v) {
    const auto& cyc = m.face_cycle(face);
    // Exactly one dart runs with the orientation: the left edge.
    int with = 0;
    size_t left_pos = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (x.is_out(cyc[i])) {
        ++with;
        left_pos = i;
      }
    }
    expect(with == 1, Err::MalformedTree, "internal face left length is not 1");
    // Children bottom-up: the in-darts after the left edge, reversed.
    std::vector<Dart> kids;
    for (size_t s = 1; s < cyc.size(); ++s)
      kids.push_back(cyc[(left_pos + s) % cyc.size()]);
    std::reverse(kids.begin(), kids.end());
    for (Dart hd : kids) {
      int child_face = m.face_of(CombMap::alpha(hd));  // face right of the edge
      int c = p.node_count();
      p.nodes.emplace_back();
      p.nodes[c].parent = tree_v;
      p.nodes[tree_v].children.push_back(c);
      if (child_face != ext) rec(child_face, c);
    }
  };
  rec(m.face_of(m.root()), 0);
  return p;
}

// Full binary tree with j-1 >= 1 leaves -> quasi-triangulation dissection
// (all internal faces of degree 3). The single-leaf tree maps to the
// one-edge map.
inline PlaneTree plane_from_full_binary_shape(const BinaryTree& b) {
  // Direct shape copy: internal binary nodes keep their two children.
  PlaneTree p;
  p.nodes.resize(b.node_count());
  std::function<void(int)> rec = [&](int v) {
    if (b.is_leaf(v)) return;
    p.nodes[v].children = {b.nodes[v].left, b.nodes[v].right};
    p.nodes[b.nodes[v].left].parent = v;
    p.nodes[b.nodes[v].right].parent = v;
    rec(b.nodes[v].left);
    rec(b.nodes[v].right);
  };
  rec(b.root);
  p.root = b.root;
  return p;
}

inline BipolarMap dissection_from_binary_tree(const BinaryTree& b) {
  if (b.node_count() == 1) {
    CombMap m = CombMap::from_rotation({0, 1}, 0);
    return check_bipolar(m, {1});
  }
  return dissection_from_plane_tree(plane_from_full_binary_shape(b));
}

inline BinaryTree binary_tree_from_dissection(const BipolarMap& x) {
  if (x.map().edge_count() == 1) return BinaryTree::single_leaf();
  PlaneTree p = plane_tree_from_dissection(x);
  BinaryTree b;
  b.nodes.resize(p.node_count());
  std::function<void(int)> rec = [&](int v) {
    const auto& kids = p.nodes[v].children;
    expect(kids.empty() || kids.size() == 2, Err::MalformedTree,
           "face with right length != 2 in a binary dissection");
    if (kids.empty()) return;
    b.nodes[v].left = kids[0];
    b.nodes[v].right = kids[1];
    b.nodes[kids[0]].parent = v;
    b.nodes[kids[0]].right_child = false;
    b.nodes[kids[1]].parent = v;
    b.nodes[kids[1]].right_child = true;
    rec(kids[0]);
    rec(kids[1]);
  };
  rec(p.root);
  b.root = p.root;
  return b;
}

inline BinaryTree right_comb(int left_leaves) {
  expect(left_leaves >= 1, Err::DomainError, "comb needs at least one node");
  BinaryTree t;
  t.nodes.resize(2 * left_leaves + 1);
  int prev = -1;
  for (int i = 0; i < left_leaves; ++i) {
    int node = 2 * i;
    int leaf = 2 * i + 1;
    t.nodes[node].parent = prev;
    t.nodes[node].right_child = true;
    if (prev >= 0) t.nodes[prev].right = node;
    t.nodes[leaf].parent = node;
    t.nodes[leaf].right_child = false;
    t.nodes[node].left = leaf;
    prev = node;
  }
  int last_leaf = 2 * left_leaves;
  t.nodes[last_leaf].parent = prev;
  t.nodes[last_leaf].right_child = true;
  t.nodes[prev].right = last_leaf;
  t.root = 0;
  return t;
}

}  // namespace bipolar_lab
