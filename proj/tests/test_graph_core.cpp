#include <doctest.h>

#include <filesystem>
#include <memory>
#include <sstream>

#include "oracles.hpp"
#include "polylab/error.hpp"
#include "polylab/generators.hpp"
#include "polylab/graph.hpp"
#include "polylab/metric.hpp"
#include "polylab/spectrum.hpp"

using namespace polylab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("graph validation rejects malformed input") {
  const std::vector<Edge> loop{{0, 0}};
  CHECK(code_of([&] { SimpleGraph::from_edges(2, loop); }) == ErrorCode::kSelfLoop);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(code_of([&] { SimpleGraph::from_edges(2, dup); }) == ErrorCode::kDuplicateEdge);
  const std::vector<Edge> out{{0, 5}};
  CHECK(code_of([&] { SimpleGraph::from_edges(3, out); }) == ErrorCode::kIndexOutOfRange);
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  CHECK(code_of([&] { RegularGraph::from_edge_list(3, path); }) == ErrorCode::kNonRegular);
}

TEST_CASE("named generators") {
  const auto p = petersen();
  CHECK(p.num_vertices() == 10);
  CHECK(p.degree() == 3);
  CHECK(girth(p) == 5);
  CHECK(oracle::girth(p) == 5);
  CHECK(diameter(p) == 2);
  CHECK_FALSE(is_bipartite(p));

  const auto ico = icosahedron();
  CHECK(ico.num_vertices() == 12);
  CHECK(ico.degree() == 5);
  CHECK(common_neighbor_count(ico) == 2);

  const auto k5 = complete_graph(5);
  CHECK(common_neighbor_count(k5) == 3);

  const auto c6 = cycle_graph(6);
  CHECK(is_bipartite(c6));
  CHECK(shortest_odd_cycle(c6).empty());

  const auto torus = torus_triangulation(7, 7);
  CHECK(torus.degree() == 6);
  CHECK(common_neighbor_count(torus) == 2);
  CHECK(torus.label_width() == 2);
  CHECK(torus.label(15)[0] == 2);
  CHECK(torus.label(15)[1] == 1);
}

TEST_CASE("girth and odd cycles agree with oracles") {
  for (const auto& g : {petersen(), icosahedron(), cycle_graph(7), complete_graph(4), torus_triangulation(7, 8)}) {
    CHECK(girth(g) == oracle::girth(g));
    const auto cyc = shortest_odd_cycle(g);
    REQUIRE(cyc.size() % 2 == 1);
    for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
  }
  CHECK(shortest_odd_cycle(petersen()).size() == 5);
}

TEST_CASE("metric matches Floyd-Warshall") {
  const auto g = std::make_shared<const SimpleGraph>(torus_triangulation(7, 7));
  const GraphMetric metric(g);
  const auto d = oracle::all_pairs(*g);
  for (Vertex u = 0; u < g->num_vertices(); ++u) {
    const auto bfs = bfs_distances(*g, u);
    for (Vertex v = 0; v < g->num_vertices(); ++v) {
      CHECK(metric.distance(u, v) == d[u][v]);
      CHECK(bfs[v] == d[u][v]);
    }
  }
  const auto path = metric.geodesic(0, 24);
  CHECK(static_cast<int>(path.size()) == d[0][24] + 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g->has_edge(path[i], path[i + 1]));
}

TEST_CASE("center of a tree-like triple") {
  const auto g = std::make_shared<const SimpleGraph>(petersen());
  const GraphMetric metric(g);
  const auto d = oracle::all_pairs(*g);
  // every triple of a girth-5 graph with pairwise distance <= 1 has a center
  for (Vertex x = 0; x < 10; ++x)
    for (Vertex y : g->neighbors(x)) {
      const Vertex c = metric.center(x, y, y);
      CHECK(d[x][c] + d[y][c] + d[y][c] == (d[x][y] + d[y][y] + d[x][y]) / 2);
    }
}

TEST_CASE("edge list round trip") {
  const auto g = petersen();
  const auto text = to_edge_list(g);
  const auto back = parse_edge_list(text);
  CHECK(back.edges() == g.edges());
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\nnot an edge\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_edge_list("4 3\n0 1\n1 2\n2 3\n3 0\n"); }) == ErrorCode::kNonRegular);

  const auto path = std::filesystem::temp_directory_path() / "polylab_roundtrip.edges";
  save_edge_list(path.string(), g);
  CHECK(load_edge_list(path.string()).edges() == g.edges());
  std::filesystem::remove(path);
}

TEST_CASE("property: random regular graphs meet their contract") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    RandomRegularOptions o;
    o.n = 60;
    o.d = 3;
    o.girth_min = 5;
    o.seed = seed;
    const auto g = random_regular_high_girth(o);
    CHECK(g.num_vertices() == 60);
    CHECK(g.common_degree() == 3);
    CHECK(oracle::girth(g) >= 5);
    // same seed, same graph
    CHECK(random_regular_high_girth(o).edges() == g.edges());
  }
  RandomRegularOptions impossible;
  impossible.n = 10;
  impossible.d = 3;
  impossible.girth_min = 8;
  impossible.seed = 1;
  impossible.max_tries = 3;
  CHECK(code_of([&] { random_regular_high_girth(impossible); }) == ErrorCode::kExhaustedTries);
}

TEST_CASE("spectrum of small named graphs") {
  const auto s = spectrum(petersen());
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0].value == doctest::Approx(3));
  CHECK(s.eigenvalues[1].value == doctest::Approx(1));
  CHECK(s.eigenvalues[1].mult == 5);
  CHECK(s.eigenvalues[2].value == doctest::Approx(-2));
  CHECK(s.eigenvalues[2].mult == 4);
  CHECK(s.lambda2 == doctest::Approx(1));
  CHECK(s.lambda_min == doctest::Approx(-2));

  const auto ico = icosahedron();
  const auto values = adjacency_eigenvalues(ico);
  const auto tr = oracle::traces(ico, 4);
  for (int k = 1; k <= 4; ++k) CHECK(oracle::power_sum(values, k) == doctest::Approx(tr[k].convert_to<double>()));
}

TEST_CASE("Lanczos agrees with the dense solver") {
  const auto g = torus_triangulation(9, 11);
  const auto dense = spectrum(g);
  const auto iter = iterative_spectrum(g);
  CHECK(iter.lambda2 == doctest::Approx(dense.lambda2).epsilon(1e-7));
  CHECK(iter.lambda_min == doctest::Approx(dense.lambda_min).epsilon(1e-7));
  CHECK_FALSE(iter.complete);
}

TEST_CASE("tensor product and incidence graph") {
  const auto t = tensor_product(petersen(), complete_graph(4));
  CHECK(t.num_vertices() == 40);
  CHECK(t.degree() == 9);
  const auto inc = incidence_graph(petersen());
  CHECK(inc.left_size() == 15);
  CHECK(inc.right_size() == 10);
  CHECK(inc.left_degree() == 2);
  CHECK(inc.right_degree() == 3);
  CHECK(code_of([] { distance_two_graph(incidence_graph(complete_graph(4))); }) == ErrorCode::kGirthTooSmall);
}
