#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "polylab/generators.hpp"
#include "polylab/polygraph.hpp"
#include "polylab/spectral.hpp"
#include "polylab/spectrum.hpp"

using namespace polylab;

namespace {

std::vector<double> expand(const std::vector<EigenGroup>& groups) {
  std::vector<double> out;
  for (const auto& g : groups) out.insert(out.end(), static_cast<std::size_t>(g.mult), g.value);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("chi at the trivial eigenvalue is the degree") {
  for (int d = 3; d <= 5; ++d)
    for (const auto& s : std::vector<std::vector<int>>{{0, 1, 1}, {1, 2, 3}, {1, 1}, {2, 4}}) {
      const DistanceMultiset ms(s);
      std::vector<double> top(s.size(), d);
      CHECK(chi(ms, d, top) == doctest::Approx(a_S(ms, d).convert_to<double>()));
    }
}

TEST_CASE("formula spectrum matches dense spectrum") {
  const auto base = petersen();
  for (const auto& s : std::vector<std::vector<int>>{{0, 1}, {1, 1}, {0, 1, 1}}) {
    const auto p = build_polygraph(base, DistanceMultiset(s));
    const auto formula = expand(polygraph_spectrum_by_formula(base, DistanceMultiset(s)).eigenvalues);
    const auto dense = adjacency_eigenvalues(p.graph());
    REQUIRE(formula.size() == dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) CHECK(formula[i] == doctest::Approx(dense[i]).epsilon(1e-9));
  }
}

TEST_CASE("formula spectrum reproduces closed-walk traces") {
  const auto base = petersen();
  const auto p = build_polygraph(base, DistanceMultiset({1, 1}));
  const auto formula = expand(polygraph_spectrum_by_formula(base, DistanceMultiset({1, 1})).eigenvalues);
  const auto tr = oracle::traces(p.graph(), 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(oracle::power_sum(formula, k) == doctest::Approx(tr[k].convert_to<double>()).epsilon(1e-9));
}

TEST_CASE("specialised lambda bounds") {
  CHECK(lambda_bound_111(3, 1.0) == doctest::Approx(2 * std::sqrt(2.0) * 9));
  CHECK(lambda_bound_111(5, 4.5) == doctest::Approx(4.5 * 25));
  CHECK(lambda_bound_123(3, 3.0) == doctest::Approx(6 * 3.0 * 9 * 8));
}

TEST_CASE("expander mixing lemma brackets actual edge counts") {
  const auto g = petersen();
  const double lambda = 2.0;
  for (std::uint32_t ma = 1; ma < 1024; ma += 37)
    for (std::uint32_t mb = 1; mb < 1024; mb += 53) {
      std::vector<Vertex> a, b;
      for (Vertex v = 0; v < 10; ++v) {
        if (ma >> v & 1u) a.push_back(v);
        if (mb >> v & 1u) b.push_back(v);
      }
      std::int64_t count = 0;
      for (Vertex x : a)
        for (Vertex y : b) count += g.has_edge(x, y);
      const auto r = eml_bound(g, lambda, a, b);
      CHECK(r.observed == doctest::Approx(static_cast<double>(count)));
      CHECK(r.lower <= r.observed + 1e-9);
      CHECK(r.observed <= r.upper + 1e-9);
    }
}

TEST_CASE("weighted mixing lemma brackets weighted counts") {
  const auto g = icosahedron();
  std::vector<double> wp(12), wq(12);
  for (int i = 0; i < 12; ++i) {
    wp[i] = (i * 7) % 5;
    wq[i] = (i * 3) % 4;
  }
  const auto r = eml_bound_multiset(g, std::sqrt(5.0), wp, wq);
  double direct = 0;
  for (Vertex x = 0; x < 12; ++x)
    for (Vertex y : g.neighbors(x)) direct += wp[x] * wq[y];
  CHECK(r.observed == doctest::Approx(direct));
  CHECK(r.lower <= r.observed + 1e-9);
  CHECK(r.observed <= r.upper + 1e-9);
}

TEST_CASE("Desai-Rao bound holds on small graphs") {
  for (const auto& g : {petersen(), complete_graph(5), cycle_graph(7)}) {
    const auto r = desai_rao_check(g);
    CHECK(r.holds);
    CHECK(r.lambda_min >= r.bound - 1e-9);
  }
  CHECK(desai_rao_check(cycle_graph(6)).psi == doctest::Approx(0));
}
