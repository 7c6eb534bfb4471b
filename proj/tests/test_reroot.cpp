#include <bipolar_lab/enumerate.hpp>
#include <bipolar_lab/rerooting.hpp>

#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "fixtures.hpp"

using namespace bipolar_lab;

namespace {

// The paper-level flip characterization, as an independent oracle: an edge
// is flipped iff no directed path from it reaches the boundary neighbor of N
// that heads the new root edge.
std::vector<char> flips_by_reachability(const BipolarMap& x) {
  const CombMap& m = x.map();
  auto rho = external_edges_clockwise(m);
  const int target = m.vertex_of(CombMap::alpha(rho[1]));
  std::vector<char> flip(m.edge_count(), 1);
  for (int e = 0; e < m.edge_count(); ++e) {
    // DFS from the head of e along the orientation.
    std::vector<char> seen(m.vertex_count(), 0);
    std::vector<int> stack{x.edge_head(e)};
    seen[x.edge_head(e)] = 1;
    bool reach = x.edge_head(e) == target;
    while (!stack.empty() && !reach) {
      int v = stack.back();
      stack.pop_back();
      for (Dart d : m.vertex_cycle(v)) {
        if (!x.is_out(d)) continue;
        int w = m.vertex_of(CombMap::alpha(d));
        if (w == target) reach = true;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    flip[e] = reach ? 0 : 1;
  }
  return flip;
}

}  // namespace

TEST_CASE("rerooting the triangle") {
  BipolarMap x = fixtures::triangle_oriented();
  BipolarMap y = reroot(x);
  // flipped: the root and v->N; kept: S->v
  CHECK(y.tails()[0] != x.tails()[0]);
  CHECK(y.tails()[1] == x.tails()[1]);
  CHECK(y.tails()[2] != x.tails()[2]);
  // new root is the clockwise-next external edge
  CHECK(y.map().root() == external_edges_clockwise(x.map())[1]);
  BipolarMap z = reroot(reroot(y));
  CHECK(z.same_state(x));  // sigma^3 = id
}

TEST_CASE("rerooting requires external degree at least 3") {
  CHECK_THROWS_AS(reroot(fixtures::digon_oriented()), MapError);
}

TEST_CASE("flip set equals the non-boundary-reaching set and the reachability rule") {
  for (int E = 3; E <= 6; ++E) {
    enum_rooted_maps(E, true, [&](const CombMap& m) {
      if (m.external_degree() < 3) return;
      for (const BipolarMap& x : enum_bipolar(m)) {
        auto by_reach = flips_by_reachability(x);
        BipolarMap y = reroot(x);
        for (int e = 0; e < E; ++e) {
          bool flipped = y.tails()[e] != x.tails()[e];
          CHECK(flipped == !is_boundary_reaching(x, e));
          CHECK(flipped == (by_reach[e] == 1));
        }
      }
    });
  }
}

TEST_CASE("separating path on the triangle") {
  BipolarMap x = fixtures::triangle_oriented();
  auto p = separating_path(x);
  REQUIRE(p.size() == 1);
  CHECK(CombMap::edge_of(p[0]) == 1);  // the edge S->v
}

TEST_CASE("separating path bounds the boundary-reaching submap") {
  for (int E = 3; E <= 6; ++E) {
    enum_rooted_maps(E, true, [&](const CombMap& m) {
      if (m.external_degree() < 3) return;
      for (const BipolarMap& x : enum_bipolar(m)) {
        auto p = separating_path(x);
        std::set<int> on_p;
        for (Dart d : p) {
          on_p.insert(CombMap::edge_of(d));
          CHECK(is_boundary_reaching(x, CombMap::edge_of(d)));
        }
        auto region = faces_right_of_path(m, p);
        for (int e = 0; e < E; ++e) {
          bool in_set = on_p.count(e) || region[m.face_of(2 * e)] ||
                        region[m.face_of(2 * e + 1)];
          CHECK(in_set == is_boundary_reaching(x, e));
        }
      }
    });
  }
}

TEST_CASE("triangle orbit has length 3 and every edge multiplicity 2") {
  Orbit orb = orbit_of(fixtures::triangle_oriented());
  CHECK(orb.length() == 3);
  for (int e = 0; e < 3; ++e) CHECK(multiplicity(orb, e) == 2);
}

TEST_CASE("orbit lemma on every 2-connected map with j >= 3, E <= 6") {
  for (int E = 3; E <= 6; ++E) {
    enum_rooted_maps(E, true, [&](const CombMap& m) {
      const int j = m.external_degree();
      if (j < 3) return;
      OrientationFamily fam = orientation_family(m);
      // the count per root does not depend on the root
      for (const auto& g : fam.by_root) CHECK(g.size() == fam.by_root[0].size());
      auto orbits = partition_into_orbits(fam);
      long covered = 0;
      for (const Orbit& orb : orbits) {
        covered += orb.length();
        CHECK(orb.length() % j == 0);
        for (int e = 0; e < E; ++e)
          CHECK(multiplicity(orb, e) == 2 * orb.length() / j);
      }
      CHECK(covered == fam.total());
      // per-edge proportion over the whole family: exactly 2/j
      auto all = fam.all();
      for (int e = 0; e < E; ++e) {
        long not_br = 0;
        for (const BipolarMap& x : all)
          if (!is_boundary_reaching(x, e)) ++not_br;
        CHECK(not_br * j == 2 * fam.total());
      }
    });
  }
}

TEST_CASE("rerooting maps the i-th root class onto the (i+1)-st bijectively") {
  for (int E = 3; E <= 5; ++E) {
    enum_rooted_maps(E, true, [&](const CombMap& m) {
      const int j = m.external_degree();
      if (j < 3) return;
      OrientationFamily fam = orientation_family(m);
      for (int i = 0; i < j; ++i) {
        std::set<std::pair<Dart, Orientation>> next;
        for (const BipolarMap& x : fam.by_root[(i + 1) % j])
          next.insert({x.map().root(), x.tails()});
        std::set<std::pair<Dart, Orientation>> image;
        for (const BipolarMap& x : fam.by_root[i]) {
          BipolarMap y = reroot(x);
          auto key = std::make_pair(y.map().root(), y.tails());
          CHECK(next.count(key) == 1);
          CHECK(image.insert(key).second);
        }
        CHECK(image.size() == next.size());
      }
    });
  }
}

TEST_CASE("special elements alternate around each internal corner") {
  for (int E = 3; E <= 5; ++E) {
    enum_rooted_maps(E, true, [&](const CombMap& m) {
      if (m.external_degree() < 3) return;
      OrientationFamily fam = orientation_family(m);
      for (const Orbit& orb : partition_into_orbits(fam)) {
        for (Dart d = 0; d < m.n_darts(); ++d) {
          // corner between d and sigma(d); skip external corners
          if (m.face_of(m.sigma(d)) == m.external_face()) continue;
          int e = CombMap::edge_of(d), e2 = CombMap::edge_of(m.sigma(d));
          if (e == e2) continue;
          std::vector<int> cases;
          for (const BipolarMap& x : orb.elements) {
            bool a = is_boundary_reaching(x, e), b = is_boundary_reaching(x, e2);
            if (a != b) cases.push_back(a ? 0 : 1);
          }
          for (size_t i = 0; i < cases.size(); ++i)
            CHECK(cases[i] != cases[(i + 1) % cases.size()]);
          CHECK(cases.size() % 2 == 0);
        }
      }
    });
  }
}

TEST_CASE("orbit partition rejects maps that are not 2-connected") {
  CHECK_THROWS_AS(orientation_family(fixtures::bowtie()), MapError);
}
