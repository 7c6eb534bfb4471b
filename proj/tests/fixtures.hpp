#pragma once
// Small hand-encoded maps shared across test files.
//
// Drawing conventions used to encode rotations: sigma = counterclockwise,
// external face on the left of the root edge.

#include <bipolar_lab/bipolar.hpp>
#include <bipolar_lab/map_core.hpp>

namespace fixtures {

using bipolar_lab::BipolarMap;
using bipolar_lab::CombMap;
using bipolar_lab::Dart;

// Two vertices S, N joined by two parallel edges, both oriented S -> N.
// Edge 0 (darts 0@S, 1@N) is the root, edge 1 (darts 2@S, 3@N) is the right
// boundary.
inline CombMap digon() {
  return CombMap::from_rotation({2, 3, 0, 1}, 0);
}
inline BipolarMap digon_oriented() {
  return bipolar_lab::check_bipolar(digon(), {1, 1});
}

// Triangle on S, v, N with edges root = S->N (darts 0,1), S->v (2,3),
// v->N (4,5). External face to the left of the root; right boundary S-v-N.
inline CombMap triangle() {
  // S: darts 0 (root), 2; v: 3, 4; N: 1, 5.
  // External orbit must be {1, 2, 4}: phi(1)=sigma(0)=2, phi(2)=sigma(3)=4,
  // phi(4)=sigma(5)=1.
  std::vector<Dart> sigma(6);
  sigma[0] = 2;
  sigma[2] = 0;
  sigma[3] = 4;
  sigma[4] = 3;
  sigma[5] = 1;
  sigma[1] = 5;
  return CombMap::from_rotation(sigma, 0);
}
inline BipolarMap triangle_oriented() {
  return bipolar_lab::check_bipolar(triangle(), {1, 1, 1});
}

// The doubled-root quasi-triangulation with one internal vertex: S, N joined
// by the root (0,1) and a parallel edge (2,3), plus v inside the lens with
// S->v (4,5) and v->N (6,7). Both internal faces are triangles.
inline CombMap lens_with_inner_vertex() {
  std::vector<Dart> sigma(8);
  // S: (0 2 4), N: (3 1 7), v: (5 6)
  sigma[0] = 2;
  sigma[2] = 4;
  sigma[4] = 0;
  sigma[3] = 1;
  sigma[1] = 7;
  sigma[7] = 3;
  sigma[5] = 6;
  sigma[6] = 5;
  return CombMap::from_rotation(sigma, 0);
}
inline BipolarMap lens_oriented() {
  return bipolar_lab::check_bipolar(lens_with_inner_vertex(), {1, 1, 1, 1});
}

// K4 embedded with outer triangle (1,2,3) and center vertex 4.
// Edges: 0:{1,2} darts(0,1), 1:{1,3} (2,3), 2:{1,4} (4,5), 3:{2,3} (6,7),
// 4:{2,4} (8,9), 5:{3,4} (10,11). Root dart 1 (2->1) has the outer face on
// its left.
inline CombMap k4() {
  std::vector<Dart> sigma(12);
  // vertex 1: (0 4 2); vertex 2: (6 8 1); vertex 3: (3 10 7); vertex 4: (11 5 9)
  sigma[0] = 4;
  sigma[4] = 2;
  sigma[2] = 0;
  sigma[6] = 8;
  sigma[8] = 1;
  sigma[1] = 6;
  sigma[3] = 10;
  sigma[10] = 7;
  sigma[7] = 3;
  sigma[11] = 5;
  sigma[5] = 9;
  sigma[9] = 11;
  return CombMap::from_rotation(sigma, 1);
}

// Two triangles sharing a single vertex (a cut vertex): not 2-connected.
inline CombMap bowtie() {
  // Vertices: c (cut), a1, b1 (first triangle), a2, b2 (second).
  // Triangle 1: c-a1 (0,1), a1-b1 (2,3), b1-c (4,5).
  // Triangle 2: c-a2 (6,7), a2-b2 (8,9), b2-c (10,11).
  std::vector<Dart> sigma(12);
  // c: (0 5 6 11), a1: (1 2), b1: (3 4), a2: (7 8), b2: (9 10)
  sigma[0] = 5;
  sigma[5] = 6;
  sigma[6] = 11;
  sigma[11] = 0;
  sigma[1] = 2;
  sigma[2] = 1;
  sigma[3] = 4;
  sigma[4] = 3;
  sigma[7] = 8;
  sigma[8] = 7;
  sigma[9] = 10;
  sigma[10] = 9;
  return CombMap::from_rotation(sigma, 0);
}

inline CombMap single_loop() {
  return CombMap::from_rotation({1, 0}, 0);
}

// The n-wheel: an n-gon rim (counterclockwise v_0..v_{n-1}) with a hub
// joined to every rim vertex. Rim edge i = {v_i, v_{i+1}} has id i; spoke
// {v_i, hub} has id n + i. Rooted on the rim with the outside on the left.
inline CombMap wheel(int n) {
  std::vector<Dart> sigma(4 * n);
  auto rim_even = [&](int i) { return 2 * (i % n); };
  auto rim_odd = [&](int i) { return 2 * (i % n) + 1; };
  auto spoke_even = [&](int i) { return 2 * (n + i % n); };
  auto spoke_odd = [&](int i) { return 2 * (n + i % n) + 1; };
  for (int i = 0; i < n; ++i) {
    Dart a = rim_even(i), b = spoke_even(i), c = rim_odd((i + n - 1) % n);
    sigma[a] = b;
    sigma[b] = c;
    sigma[c] = a;
    sigma[spoke_odd(i)] = spoke_odd((i + 1) % n);
  }
  return CombMap::from_rotation(sigma, 1);
}

inline CombMap single_edge() {
  return CombMap::from_rotation({0, 1}, 0);
}

}  // namespace fixtures
