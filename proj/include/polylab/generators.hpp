#pragma once

#include <cstdint>

#include "polylab/graph.hpp"

namespace polylab {

RegularGraph petersen();
RegularGraph icosahedron();
RegularGraph cycle_graph(Vertex n);
RegularGraph complete_graph(Vertex n);

// Triangulated torus: Z_m x Z_n with generators (+-1,0), (0,+-1), +-(1,1). Needs m, n >= 7.
// Vertex (i, j) has index i * n + j and label (i, j).
RegularGraph torus_triangulation(Vertex m, Vertex n);

// Vertex (u, v) has index u * |H| + v and label (u, v).
RegularGraph tensor_product(const RegularGraph& g, const RegularGraph& h);

// Left part = edges of g in edges() order, right part = vertices of g.
BipartiteBiregularGraph incidence_graph(const RegularGraph& g);

// Graph on the left part of h, x ~ y when they share a right neighbor. Needs girth(h) >= 8.
RegularGraph distance_two_graph(const BipartiteBiregularGraph& h);

struct RandomRegularOptions {
  Vertex n = 0;
  Vertex d = 0;
  int girth_min = 3;
  std::uint64_t seed = 0;
  int max_tries = 100;
  bool require_nonbipartite = false;
};

// Seeded configuration-model sample followed by girth-raising edge switches.
// Throws kExhaustedTries when no attempt reaches the requested girth.
RegularGraph random_regular_high_girth(const RandomRegularOptions& options);

}  // namespace polylab
