#include <doctest.h>

#include "oracles.hpp"
#include "polylab/error.hpp"
#include "polylab/generators.hpp"
#include "polylab/hdx.hpp"
#include "polylab/polygraph.hpp"

using namespace polylab;

TEST_CASE("clique complex of K5") {
  const CliqueComplex2 c(complete_graph(5));
  CHECK(c.edges().size() == 10);
  CHECK(c.triangles().size() == 10);
  for (std::int64_t e = 0; e < 10; ++e) CHECK(c.triangles_of_edge(e).size() == 3);
  const auto hist = triangles_per_edge(c);
  CHECK(hist.size() == 1);
  CHECK(hist.at(3) == 10);
}

TEST_CASE("aux graph of the icosahedron") {
  const CliqueComplex2 c(icosahedron());
  const auto aux = aux_graph(c);
  CHECK(aux.graph.num_vertices() == 30);
  REQUIRE(aux.degree);
  CHECK(*aux.degree == 4);
  CHECK(aux.connected);
  // two edges share at most one triangle, so each triangle contributes three aux edges
  CHECK(aux.graph.num_edges() == 3 * static_cast<std::int64_t>(c.triangles().size()));
}

TEST_CASE("center classes on petersen [0,1,1]") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  const CliqueComplex2 c(p.graph());
  const auto part = center_partition(c, p);
  CHECK(part.classes.size() == 1000);
  CHECK(part.class_size == 27);
  CHECK(part.every_class_complete_tripartite);
  CHECK(part.every_edge_in_two_classes);
  const auto mids = midpoint_multiset(p);
  for (auto m : mids) CHECK(m == 27);
}

TEST_CASE("K_{d,d,d} floor against exhaustive search") {
  for (int d = 1; d <= 2; ++d) {
    const auto brute = oracle::kddd_minimum(d);
    const auto lib = kddd_triangle_minimum(d);
    CHECK(lib == brute);
    for (std::size_t w = 0; w < brute.size(); ++w) CHECK(kddd_triangle_floor(d, static_cast<std::int64_t>(w)) <= brute[w]);
  }
}

TEST_CASE("coboundary witness on petersen [0,1,1]") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  const auto w = coboundary_witness(p);
  CHECK(w.violations == 0);
  CHECK(w.odd_cycle.size() == 5);
  // every consecutive pair is an edge of A: distinguished coordinate not first
  for (std::size_t i = 0; i < w.odd_cycle.size(); ++i) {
    const Vertex u = w.odd_cycle[i], v = w.odd_cycle[(i + 1) % w.odd_cycle.size()];
    CHECK(p.graph().has_edge(u, v));
    CHECK(distance_profile(p, u, v)[0] != 0);
  }
  bool threw = false;
  try {
    coboundary_witness(build_polygraph(petersen(), DistanceMultiset({1, 1})));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kWrongS;
  }
  CHECK(threw);
}

TEST_CASE("discrepancy witness") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  const std::vector<Vertex> a{0, 1, 2, 3, 4};
  const auto r = discrepancy_witness(p, a);
  CHECK(r.inside.size() == 125);
  CHECK(r.outside.size() == 125);
  CHECK(r.cross_edges == 0);
  const auto q = build_polygraph(petersen(), DistanceMultiset({1, 1}));
  bool threw = false;
  try {
    discrepancy_witness(q, a);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kZeroNotInS;
  }
  CHECK(threw);
}

TEST_CASE("overlap calculator") {
  const auto r = overlap_bound_calculator({});
  CHECK(r.fraction > 0);
  CHECK(r.fraction < 1);
  CHECK(r.triangles <= r.total_triangles);
}
