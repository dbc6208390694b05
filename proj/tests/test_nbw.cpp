#include <doctest.h>

#include "oracles.hpp"
#include "polylab/error.hpp"
#include "polylab/generators.hpp"
#include "polylab/nbw.hpp"

using namespace polylab;

TEST_CASE("Geronimus recurrence") {
  const auto p2 = geronimus(2, 3);
  CHECK(p2 == IntPolynomial({BigInt(-3), BigInt(0), BigInt(1)}));
  const auto p3 = geronimus(3, 3);
  // x^3 - 5x for d = 3
  CHECK(p3 == IntPolynomial({BigInt(0), BigInt(-5), BigInt(0), BigInt(1)}));
  const auto fam = geronimus_family(6, 4);
  for (int t = 2; t < 6; ++t) {
    // p_{t+1}(x) = x p_t(x) - 3 p_{t-1}(x) at a few integer points
    for (int x = -3; x <= 3; ++x) {
      const BigInt bx = x;
      CHECK(fam[t + 1].evaluate(bx) == bx * fam[t].evaluate(bx) - 3 * fam[t - 1].evaluate(bx));
    }
  }
}

TEST_CASE("roots of walk polynomials lie inside the Ramanujan interval") {
  for (int d = 3; d <= 6; ++d)
    for (int t = 1; t <= 6; ++t) {
      const auto roots = geronimus(t, d).roots();
      CHECK(static_cast<int>(roots.size()) == t);
      for (double r : roots) CHECK(std::abs(r) <= d + 1e-9);
    }
}

TEST_CASE("non-backtracking walk matrix equals brute-force DFS counts") {
  for (const auto& g : {petersen(), icosahedron(), complete_graph(5)}) {
    for (int t = 0; t <= 5; ++t) {
      const auto m = nbw_matrix(g, t);
      const auto via_poly = evaluate_at_adjacency(geronimus(t, g.degree()), g);
      CHECK(m == via_poly);
      for (Vertex s = 0; s < g.num_vertices(); ++s) {
        const auto counts = oracle::nbw_counts_from(g, s, t);
        for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(m(s, v) == counts[v]);
      }
    }
  }
}

TEST_CASE("property: row sums count all non-backtracking walks") {
  const auto g = torus_triangulation(7, 7);
  for (int t = 1; t <= 4; ++t) {
    const auto m = nbw_matrix(g, t);
    std::int64_t expected = 6;
    for (int i = 1; i < t; ++i) expected *= 5;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      std::int64_t row = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) row += m(s, v);
      CHECK(row == expected);
    }
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  const auto g = complete_graph(40);
  bool threw = false;
  try {
    nbw_matrix(g, 20);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kOverflow;
  }
  CHECK(threw);
}

TEST_CASE("walk-matrix connectivity") {
  const auto p = petersen();
  const auto c1 = nbw_connected_nonbipartite(p, 1);
  CHECK(c1.connected);
  CHECK_FALSE(c1.bipartite);
  const auto c6 = cycle_graph(6);
  const auto even = nbw_connected_nonbipartite(c6, 2);
  CHECK_FALSE(even.connected);
}
