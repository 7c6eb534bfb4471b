#include <bipolar_lab/counting.hpp>
#include <bipolar_lab/enumerate.hpp>
#include <bipolar_lab/trees.hpp>

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

using namespace bipolar_lab;

namespace {

// All full binary trees with the given number of leaves.
std::vector<BinaryTree> all_binary_trees(int leaves) {
  std::vector<BinaryTree> out;
  if (leaves == 1) {
    out.push_back(BinaryTree::single_leaf());
    return out;
  }
  // grow from smaller trees, dedupe by shape
  std::set<std::string> seen;
  for (const BinaryTree& t : all_binary_trees(leaves - 1)) {
    for (int x = 0; x < t.node_count(); ++x) {
      for (bool side : {false, true}) {
        BinaryTree g = remy_grow(t, x, side);
        if (seen.insert(g.encode()).second) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

// Canonical encoding of a doubly marked tree (marks embedded in preorder).
std::string encode_marked(const BinaryTree& t, int leaf, int inner) {
  std::string s;
  std::function<void(int)> rec = [&](int v) {
    if (t.is_leaf(v)) {
      s.push_back('.');
    } else {
      s.push_back('(');
      rec(t.nodes[v].left);
      rec(t.nodes[v].right);
      s.push_back(')');
    }
    if (v == leaf) s.push_back('!');
    if (v == inner) s.push_back('*');
  };
  rec(t.root);
  return s;
}

}  // namespace

TEST_CASE("binary tree counts are Catalan") {
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<long>(all_binary_trees(n).size()) ==
          static_cast<long>(catalan(n - 1)));
}

TEST_CASE("remy grow/shrink are inverse") {
  for (const BinaryTree& t : all_binary_trees(4)) {
    for (int x = 0; x < t.node_count(); ++x) {
      for (bool side : {false, true}) {
        BinaryTree g = remy_grow(t, x, side);
        int new_leaf = g.node_count() - 1;
        RemyShrinkResult back = remy_shrink(g, new_leaf);
        CHECK(back.tree.encode() == t.encode());
        CHECK(back.edge == x);
        CHECK(back.right == side);
      }
    }
  }
}

TEST_CASE("single-leaf growth has exactly two outcomes") {
  BinaryTree t = BinaryTree::single_leaf();
  BinaryTree l = remy_grow(t, 0, false), r = remy_grow(t, 0, true);
  CHECK(l.leaf_count() == 2);
  CHECK(r.leaf_count() == 2);
  CHECK(l.encode() == r.encode());  // same shape, different marked leaf
}

TEST_CASE("cut-and-attach is an involution with reversed mark types") {
  for (int leaves = 3; leaves <= 7; ++leaves) {
    for (const BinaryTree& t : all_binary_trees(leaves)) {
      for (bool leaf_right : {false, true}) {
        for (int lf : t.leaf_edges(leaf_right)) {
          for (int in : t.inner_edges(!leaf_right)) {
            ChiResult once = cut_and_attach(t, lf, in);
            // leaf-of-one-type count drops, the other grows
            CHECK(once.tree.count_leaf_edges(leaf_right) ==
                  t.count_leaf_edges(leaf_right) - 1);
            CHECK(once.tree.count_leaf_edges(!leaf_right) ==
                  t.count_leaf_edges(!leaf_right) + 1);
            CHECK(once.tree.is_leaf(once.leaf_edge));
            CHECK(once.tree.nodes[once.leaf_edge].right_child == !leaf_right);
            CHECK_FALSE(once.tree.is_leaf(once.inner_edge));
            CHECK(once.tree.nodes[once.inner_edge].right_child == leaf_right);
            ChiResult twice = cut_and_attach(once.tree, once.leaf_edge, once.inner_edge);
            CHECK(twice.tree.encode() == t.encode());
            CHECK(twice.leaf_edge == lf);
            CHECK(twice.inner_edge == in);
          }
        }
      }
    }
  }
}

TEST_CASE("cut-and-attach matches the marked-set cardinality identity") {
  // |F_{a+1,b}| = |G_{a,b+1}| realized by explicit matching at (3,2) -> (2,3).
  std::map<std::string, int> image;
  long f_count = 0;
  for (const BinaryTree& t : all_binary_trees(5)) {
    if (t.count_leaf_edges(false) != 3 || t.count_leaf_edges(true) != 2) continue;
    for (int lf : t.leaf_edges(false))
      for (int in : t.inner_edges(true)) {
        ++f_count;
        ChiResult r = cut_and_attach(t, lf, in);
        CHECK(r.tree.count_leaf_edges(false) == 2);
        CHECK(r.tree.count_leaf_edges(true) == 3);
        ++image[encode_marked(r.tree, r.leaf_edge, r.inner_edge)];
      }
  }
  long g_count = 0;
  for (const BinaryTree& t : all_binary_trees(5))
    if (t.count_leaf_edges(false) == 2 && t.count_leaf_edges(true) == 3)
      g_count += static_cast<long>(t.leaf_edges(true).size()) *
                 static_cast<long>(t.inner_edges(false).size());
  CHECK(f_count == g_count);
  CHECK(static_cast<long>(image.size()) == f_count);  // injective
  // (a+1) a Nar_{a+1,b} with (a,b) = (2,2)
  CHECK(f_count == 3 * 2 * 6);
}

TEST_CASE("five-left/four-right marked tree maps to four-left/five-right") {
  // A witness with 5 left and 4 right leaf edges, as in the involution's
  // illustration: comb of 4 left leaves grown to add one more.
  BinaryTree t = right_comb(5);
  // add right leaves by growing at some left leaf edges
  t = remy_grow(t, t.leaf_edges(false)[1], true);
  t = remy_grow(t, t.leaf_edges(false)[2], true);
  t = remy_grow(t, t.leaf_edges(false)[3], true);
  REQUIRE(t.count_leaf_edges(false) == 5);
  REQUIRE(t.count_leaf_edges(true) == 4);
  ChiResult r = cut_and_attach(t, t.leaf_edges(false)[0], t.inner_edges(true)[0]);
  CHECK(r.tree.count_leaf_edges(false) == 4);
  CHECK(r.tree.count_leaf_edges(true) == 5);
}

TEST_CASE("plane <-> binary rotation correspondence") {
  // counts: plane trees with a internal nodes and b leaves ~ binary trees
  // with a left and b right leaf edges, both Nar_{a,b}
  std::map<std::pair<int, int>, long> plane_counts, binary_counts;
  for (const BinaryTree& t : all_binary_trees(7)) {
    ++binary_counts[{t.count_leaf_edges(false), t.count_leaf_edges(true)}];
    PlaneTree p = plane_from_binary(t);
    CHECK(p.internal_count() == t.count_leaf_edges(false));
    CHECK(p.leaf_count() == t.count_leaf_edges(true));
    BinaryTree back = binary_from_plane(p);
    CHECK(back.encode() == t.encode());
  }
  for (auto [ab, c] : binary_counts) {
    auto [a, b] = ab;
    if (a >= 1 && b >= 1) CHECK(c == static_cast<long>(narayana(a, b)));
  }
}

TEST_CASE("plane tree <-> dissection bijection") {
  // Enumerate plane trees via binary trees, map to dissections, check the
  // class parameters and the roundtrip.
  std::map<std::pair<int, int>, long> class_counts;
  for (int leaves = 2; leaves <= 7; ++leaves) {
    for (const BinaryTree& t : all_binary_trees(leaves)) {
      PlaneTree p = plane_from_binary(t);
      BipolarMap x = dissection_from_plane_tree(p);
      const CombMap& m = x.map();
      CHECK(m.internal_vertex_count() == 0);
      CHECK(m.internal_face_count() == p.internal_count());
      CHECK(m.external_degree() == p.leaf_count() + 1);
      ++class_counts[{p.internal_count(), m.external_degree()}];
      PlaneTree back = plane_tree_from_dissection(x);
      CHECK(back.encode() == p.encode());
    }
  }
  for (auto [lj, c] : class_counts) {
    auto [l, j] = lj;
    CHECK(c == static_cast<long>(count_B(0, l, j)));
  }
}

TEST_CASE("binary tree <-> triangular dissection bijection") {
  for (int leaves = 1; leaves <= 7; ++leaves) {
    long n = 0;
    for (const BinaryTree& t : all_binary_trees(leaves)) {
      BipolarMap x = dissection_from_binary_tree(t);
      CHECK(is_quasi_triangulation(x.map()));
      CHECK(x.map().internal_vertex_count() == 0);
      CHECK(x.map().external_degree() == leaves + 1);
      BinaryTree back = binary_tree_from_dissection(x);
      CHECK(back.encode() == t.encode());
      ++n;
    }
    CHECK(n == static_cast<long>(count_T(0, leaves + 1)));
  }
}

TEST_CASE("every dissection admits exactly one bipolar orientation") {
  for (int E = 1; E <= 7; ++E) {
    enum_rooted_maps(E, true, [&](const CombMap& m) {
      if (m.internal_vertex_count() != 0) return;
      CHECK(enum_bipolar(m).size() == 1);
    });
  }
}

TEST_CASE("malformed trees are rejected") {
  BinaryTree t = BinaryTree::single_leaf();
  CHECK_THROWS_AS(cut_and_attach(t, 0, 0), MapError);
  CHECK_THROWS_AS(remy_shrink(t, 0), MapError);
}
