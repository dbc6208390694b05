#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "polylab/error.hpp"
#include "polylab/generators.hpp"
#include "polylab/polygraph.hpp"

using namespace polylab;

namespace {

// Polygraph adjacency from scratch: every pair of tuples, coordinate distances from Floyd-Warshall.
std::vector<Edge> brute_polygraph_edges(const RegularGraph& base, const std::vector<int>& s) {
  const auto d = oracle::all_pairs(base);
  const int n = base.num_vertices();
  const int m = static_cast<int>(s.size());
  int total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  auto coords = [&](int v) {
    std::vector<int> c(m);
    for (int i = m - 1; i >= 0; --i) {
      c[i] = v % n;
      v /= n;
    }
    return c;
  };
  std::vector<Edge> edges;
  for (int x = 0; x < total; ++x) {
    const auto cx = coords(x);
    for (int y = x + 1; y < total; ++y) {
      const auto cy = coords(y);
      std::vector<int> prof(m);
      for (int i = 0; i < m; ++i) prof[i] = d[cx[i]][cy[i]];
      if (oracle::same_multiset(prof, s)) edges.emplace_back(x, y);
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("distance multiset parsing") {
  const auto s = DistanceMultiset::parse("1,1,0");
  CHECK(s.entries() == std::vector<int>{0, 1, 1});
  CHECK(s.m() == 3);
  CHECK(s.sum() == 2);
  CHECK(s.distinct() == 2);
  CHECK(s.arrangement_count() == 3);
  CHECK(s.arrangements().size() == 3);
  CHECK(s.to_string() == "0,1,1");
  bool threw = false;
  try {
    DistanceMultiset::parse("1,-2");
  } catch (const Error&) {
    threw = true;
  }
  CHECK(threw);
}

TEST_CASE("a_S and b_S closed forms") {
  const DistanceMultiset s110({1, 1, 0});
  CHECK(a_S(s110, 3) == 27);
  CHECK(b_S(s110, 3) == 6);
  const DistanceMultiset s123({1, 2, 3});
  CHECK(b_S(s123, 3) == 40);
  for (int d = 3; d <= 7; ++d) {
    CHECK(a_S(s110, d) == 3 * d * d);
    CHECK(b_S(s110, d) == 2 * d);
    CHECK(b_S(s123, d) == 2 * (d - 1) * (d - 1) * (4 * d - 7));
  }
  CHECK(b_S(DistanceMultiset({2, 4, 6}), 3) == 544);
  CHECK(a_S(DistanceMultiset({2, 4, 6}), 3) == 82944);
}

TEST_CASE("tree triangle counts match an explicit tree") {
  for (int d = 3; d <= 4; ++d)
    for (int i = 1; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k)
          CHECK(tree_triangle_count(d, i, j, k) == oracle::tree_common(d, i, j, k));
}

TEST_CASE("b_S positivity criterion matches exhaustive matrix search") {
  for (int p = 0; p <= 6; ++p)
    for (int q = p; q <= 6; ++q)
      for (int r = q; r <= 6; ++r) {
        if (p == 0 && q == 0 && r == 0) continue;
        const bool brute = oracle::triangle_matrix_exists({p, q, r});
        CHECK(b_S_positive_m3(p, q, r) == brute);
        const auto res = b_S_positive(DistanceMultiset({p, q, r}));
        CHECK(res.positive == brute);
        CHECK(res.witness.has_value() == res.positive);
        if (res.witness) {
          for (int c = 0; c < 3; ++c)
            CHECK(is_triangle_column(res.witness->rows[0][c], res.witness->rows[1][c], res.witness->rows[2][c]));
        }
      }
}

TEST_CASE("polygraph construction matches brute force") {
  const auto base = petersen();
  for (const auto& s : std::vector<std::vector<int>>{{1, 0}, {1, 1}, {0, 1, 1}}) {
    const auto p = build_polygraph(base, DistanceMultiset(s));
    CHECK(p.graph().edges() == brute_polygraph_edges(base, s));
  }
}

TEST_CASE("girth guard") {
  const auto base = petersen();
  bool threw = false;
  try {
    build_polygraph(base, DistanceMultiset({1, 2}));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kGirthTooSmall;
  }
  CHECK(threw);
  PolygraphOptions opt;
  opt.allow_unsafe_girth = true;
  const auto p = build_polygraph(base, DistanceMultiset({1, 2}), opt);
  CHECK_FALSE(p.girth_safe());
  CHECK(p.graph().edges() == brute_polygraph_edges(base, {1, 2}));
}

TEST_CASE("property: encode and decode are inverse") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  for (Vertex v = 0; v < p.graph().num_vertices(); v += 37) CHECK(p.encode(p.decode(v)) == v);
  CHECK(p.decode(123) == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("property: distance profiles of edges are orderings of S") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  for (const auto& [u, v] : p.graph().edges()) {
    const auto prof = distance_profile(p, u, v);
    CHECK(p.S().is_arrangement(prof));
  }
}

TEST_CASE("triangles and centers on petersen [0,1,1]") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  const auto tris = enumerate_triangles(p);
  CHECK(tris.size() == 27000);
  CHECK(count_triangles(p.graph()) == 27000);
  const auto d = oracle::all_pairs(p.base());
  for (std::size_t i = 0; i < tris.size(); i += 101) {
    const auto& t = tris[i];
    const auto a = p.decode(t.vertices[0]), b = p.decode(t.vertices[1]), c = p.decode(t.vertices[2]);
    for (int j = 0; j < 3; ++j) {
      const int x = t.center[j];
      CHECK(d[a[j]][x] + d[b[j]][x] + d[c[j]][x] == (d[a[j]][b[j]] + d[b[j]][c[j]] + d[a[j]][c[j]]) / 2);
    }
  }
}

TEST_CASE("midpoints lie halfway") {
  const auto p = build_polygraph(petersen(), DistanceMultiset({0, 1, 1}));
  const auto d = oracle::all_pairs(p.base());
  for (const auto& [u, v] : p.graph().edges()) {
    const auto mids = midpoints(p, u, v);
    CHECK(mids.size() == 2);
    const auto a = p.decode(u), b = p.decode(v);
    for (Vertex mid : mids) {
      const auto c = p.decode(mid);
      int du = 0, dv = 0;
      for (int j = 0; j < 3; ++j) {
        CHECK(d[a[j]][c[j]] + d[c[j]][b[j]] == d[a[j]][b[j]]);
        du += d[a[j]][c[j]];
        dv += d[c[j]][b[j]];
      }
      CHECK(du == 1);
      CHECK(dv == 1);
    }
    if (u > 300) break;
  }
}
