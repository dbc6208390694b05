#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polylab/bounds.hpp"
#include "polylab/error.hpp"
#include "polylab/generators.hpp"

using namespace polylab;

namespace {

// Brute-force grid maximum; coarse but independent of the library's optimizer.
template <class F>
double grid_max(F f, double lo, double hi, int steps) {
  double best = -INFINITY;
  for (int i = 1; i < steps; ++i) best = std::max(best, f(lo + (hi - lo) * i / steps));
  return best;
}

}  // namespace

TEST_CASE("abtb") {
  CHECK(abtb_value(5, 2) == doctest::Approx(2 + 2 * std::sqrt(2.0)));
  bool threw = false;
  try {
    abtb_value(3, 3);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kInvalidPair;
  }
  CHECK(threw);
}

TEST_CASE("catalan census small values") {
  // t = 1: only b sideways steps; t = 2: b^2 + a-b-1 (one out-and-back pair, k = 0 excluded for 2k<t)
  CHECK(catalan_walk_census(5, 2, 1) == 2);
  CHECK(catalan_walk_census(5, 2, 2) == 4);
  CHECK(catalan_walk_census(5, 2, 3) == 8 + 3 * 2 * 2);
}

TEST_CASE("closed-walk traces agree with matrix powers") {
  for (const auto& g : {petersen(), icosahedron(), complete_graph(5)}) {
    const auto fast = closed_walk_traces(g, 8);
    const auto slow = oracle::traces(g, 8);
    CHECK(fast == slow);
  }
}

TEST_CASE("entropy objective: closed form against a dense grid") {
  for (std::int64_t a = 4; a <= 20; a += 3)
    for (std::int64_t b = 1; b + 1 < a; b += 2) {
      const auto cf = entropy_closed_form(a, b);
      const double brute = grid_max([&](double x) { return entropy_objective(x, a, b); }, 0, 0.5, 20000);
      CHECK(cf.value == doctest::Approx(brute).epsilon(1e-6));
      CHECK(cf.value >= brute - 1e-12);
    }
}

TEST_CASE("tradeoff objective: library maximum dominates a grid") {
  for (std::int64_t a : {6, 9, 13})
    for (std::int64_t b : {2, 3})
      for (double r : {1.0, 2.0}) {
        if (a - b <= 2) continue;
        const auto m = tradeoff_argmax(a, b, r);
        const double brute = grid_max([&](double x) { return tradeoff_objective(x, a, b, r); }, 0, 0.5, 20000);
        CHECK(m.value >= brute - 1e-12);
        CHECK(m.value == doctest::Approx(brute).epsilon(1e-6));
      }
  bool threw = false;
  try {
    tradeoff_objective(0.2, 4, 1, 1.0);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kDegenerate;
  }
  CHECK(threw);
}

TEST_CASE("optimal r") {
  // a = 17, b = 3: c^2 = 13, R = ceil(min(4, 13) * 1) = 4, second term ceil(3 (c^3 - c^2)/(3 + c))
  const double c = std::sqrt(13.0);
  const auto second = static_cast<std::int64_t>(std::ceil(3 * (c * c * c - 13) / (3 + c)));
  CHECK(optimal_r(17, 3, 1.0) == std::min<std::int64_t>(4, second));
  CHECK(optimal_r(17, 3, 0.5) == 2);
}

TEST_CASE("local coordinates on the icosahedron") {
  const auto g = icosahedron();
  const auto r = ab_regularity(g);
  CHECK(r.a == 5);
  CHECK(r.b == 2);
  const Vertex x = 0, z = g.neighbors(0)[0];
  const auto lc = local_coordinates(g, x, z);
  CHECK(lc.psi.size() == 2);
  CHECK(lc.phi.size() == 2);
  std::int64_t cross = 0;
  for (Vertex u : lc.phi)
    for (Vertex v : lc.psi) cross += g.has_edge(u, v);
  CHECK(lc.cross_edges == cross);
  CHECK(cross_edge_min(g) <= lc.cross_edges);
  // triangular prism: triangle edges lie in one triangle, rungs in none
  const std::vector<Edge> prism{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  bool threw = false;
  try {
    ab_regularity(RegularGraph::from_edge_list(6, prism));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kNotABRegular;
  }
  CHECK(threw);
}
