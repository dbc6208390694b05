#include "polylab/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace polylab {

RegularGraph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return RegularGraph::from_edge_list(10, edges);
}

RegularGraph icosahedron() {
  // 0 = top, 1..5 upper ring, 6..10 lower ring, 11 = bottom.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(lo, lo_next);
    edges.emplace_back(lo, 11);
    edges.emplace_back(up, lo);
    edges.emplace_back(up, lo_next);
  }
  return RegularGraph::from_edge_list(12, edges);
}

RegularGraph cycle_graph(Vertex n) {
  require(n >= 3, ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return RegularGraph::from_edge_list(n, edges);
}

RegularGraph complete_graph(Vertex n) {
  require(n >= 3, ErrorCode::kInvalidArgument, "complete graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return RegularGraph::from_edge_list(n, edges);
}

RegularGraph torus_triangulation(Vertex m, Vertex n) {
  require(m >= 7 && n >= 7, ErrorCode::kInvalidArgument, "torus triangulation needs m, n >= 7");
  require(static_cast<std::int64_t>(m) * n <= std::numeric_limits<Vertex>::max(), ErrorCode::kSizeLimit,
          "torus too large");
  auto id = [&](Vertex i, Vertex j) { return ((i % m + m) % m) * n + ((j % n + n) % n); };
  std::vector<Edge> edges;
  std::vector<std::int32_t> labels;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      edges.emplace_back(id(i, j), id(i + 1, j));
      edges.emplace_back(id(i, j), id(i, j + 1));
      edges.emplace_back(id(i, j), id(i + 1, j + 1));
      labels.push_back(i);
      labels.push_back(j);
    }
  }
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  RegularGraph g = RegularGraph::from_edge_list(m * n, edges);
  g.set_labels(std::move(labels), 2);
  return g;
}

RegularGraph tensor_product(const RegularGraph& g, const RegularGraph& h) {
  const std::int64_t total = static_cast<std::int64_t>(g.num_vertices()) * h.num_vertices();
  require(total <= 50'000'000, ErrorCode::kSizeLimit, "tensor product too large");
  const Vertex nh = h.num_vertices();
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(total));
  std::vector<std::int32_t> labels;
  labels.reserve(static_cast<std::size_t>(2 * total));
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v = 0; v < nh; ++v) {
      auto& row = adjacency[static_cast<std::size_t>(u) * nh + v];
      for (Vertex u2 : g.neighbors(u)) {
        for (Vertex v2 : h.neighbors(v)) row.push_back(u2 * nh + v2);
      }
      labels.push_back(u);
      labels.push_back(v);
    }
  }
  RegularGraph out(SimpleGraph::from_adjacency(adjacency));
  out.set_labels(std::move(labels), 2);
  return out;
}

BipartiteBiregularGraph incidence_graph(const RegularGraph& g) {
  const auto edges = g.edges();
  require(!edges.empty(), ErrorCode::kInvalidArgument, "graph has no edges");
  const Vertex left = static_cast<Vertex>(edges.size());
  std::vector<Edge> inc;
  inc.reserve(2 * edges.size());
  for (Vertex e = 0; e < left; ++e) {
    inc.emplace_back(e, left + edges[e].first);
    inc.emplace_back(e, left + edges[e].second);
  }
  return BipartiteBiregularGraph(SimpleGraph::from_edges(left + g.num_vertices(), inc), left);
}

RegularGraph distance_two_graph(const BipartiteBiregularGraph& h) {
  const auto g = girth(h.graph());
  if (g && *g < 8) {
    fail(ErrorCode::kGirthTooSmall, "bipartite graph has girth " + std::to_string(*g) + ", need >= 8");
  }
  const SimpleGraph& hg = h.graph();
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(h.left_size()));
  for (Vertex x = 0; x < h.left_size(); ++x) {
    for (Vertex z : hg.neighbors(x)) {
      for (Vertex y : hg.neighbors(z)) {
        if (y != x) adjacency[x].push_back(y);
      }
    }
  }
  return RegularGraph(SimpleGraph::from_adjacency(adjacency));
}

namespace {

class BoundedRng {
 public:
  explicit BoundedRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound) by rejection, so results do not depend on the standard library.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

class SwitchingRepair {
 public:
  SwitchingRepair(Vertex n, int girth_min, std::vector<Edge> edges)
      : girth_min_(girth_min),
        edges_(std::move(edges)),
        adjacency_(static_cast<std::size_t>(n)),
        stamp_(static_cast<std::size_t>(n), 0),
        depth_(static_cast<std::size_t>(n), 0) {
    for (const auto& [a, b] : edges_) add(a, b);
  }

  bool run(BoundedRng& rng, std::int64_t budget) {
    bool clean = false;
    while (!clean && budget > 0) {
      clean = true;
      for (std::size_t i = 0; i < edges_.size() && budget > 0; ++i) {
        if (!is_bad(i)) continue;
        clean = false;
        for (int attempt = 0; attempt < 64 && budget > 0; ++attempt, --budget) {
          if (try_switch(i, rng)) break;
        }
      }
    }
    if (!clean) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (is_bad(i)) return false;
    }
    return true;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out = edges_;
    for (auto& e : out) {
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    return out;
  }

 private:
  void add(Vertex a, Vertex b) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }

  void remove(Vertex a, Vertex b) {
    auto drop = [](std::vector<Vertex>& list, Vertex x) {
      auto it = std::find(list.begin(), list.end(), x);
      *it = list.back();
      list.pop_back();
    };
    drop(adjacency_[a], b);
    drop(adjacency_[b], a);
  }

  // True if b is within `limit` steps of a in the current multigraph.
  bool within(Vertex a, Vertex b, int limit) {
    if (limit <= 0) return a == b;
    ++current_;
    frontier_.clear();
    frontier_.push_back(a);
    stamp_[a] = current_;
    depth_[a] = 0;
    for (std::size_t head = 0; head < frontier_.size(); ++head) {
      const Vertex u = frontier_[head];
      if (depth_[u] >= limit) continue;
      for (Vertex w : adjacency_[u]) {
        if (w == b) return true;
        if (stamp_[w] != current_) {
          stamp_[w] = current_;
          depth_[w] = depth_[u] + 1;
          frontier_.push_back(w);
        }
      }
    }
    return false;
  }

  // An edge is bad if it is a loop, repeated, or lies on a cycle shorter than girth_min.
  bool is_bad(std::size_t i) {
    const auto [a, b] = edges_[i];
    if (a == b) return true;
    if (std::count(adjacency_[a].begin(), adjacency_[a].end(), b) > 1) return true;
    if (girth_min_ <= 3) return false;
    remove(a, b);
    const bool short_cycle = within(a, b, girth_min_ - 2);
    add(a, b);
    return short_cycle;
  }

  bool admissible(Vertex x, Vertex y) {
    if (x == y) return false;
    if (std::find(adjacency_[x].begin(), adjacency_[x].end(), y) != adjacency_[x].end()) return false;
    return girth_min_ <= 3 || !within(x, y, girth_min_ - 2);
  }

  bool try_switch(std::size_t i, BoundedRng& rng) {
    const std::size_t j = rng.below(edges_.size());
    if (j == i) return false;
    const auto [a, b] = edges_[i];
    auto [c, e] = edges_[j];
    if (rng.below(2) == 1) std::swap(c, e);
    remove(a, b);
    remove(c, e);
    if (admissible(a, c)) {
      add(a, c);
      if (admissible(b, e)) {
        add(b, e);
        edges_[i] = {a, c};
        edges_[j] = {b, e};
        return true;
      }
      remove(a, c);
    }
    add(a, b);
    add(c, e);
    return false;
  }

  int girth_min_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint32_t> stamp_;
  std::vector<int> depth_;
  std::vector<Vertex> frontier_;
  std::uint32_t current_ = 0;
};

}  // namespace

RegularGraph random_regular_high_girth(const RandomRegularOptions& options) {
  const Vertex n = options.n;
  const Vertex d = options.d;
  require(n > 0 && d >= 0, ErrorCode::kInvalidArgument, "need n > 0 and d >= 0");
  require(d < n, ErrorCode::kInvalidArgument, "need d < n");
  require((static_cast<std::int64_t>(n) * d) % 2 == 0, ErrorCode::kInvalidArgument, "n * d must be even");
  require(options.max_tries > 0, ErrorCode::kInvalidArgument, "max_tries must be positive");
  if (d == 0) return RegularGraph::from_edge_list(n, {});

  BoundedRng rng(options.seed);
  const std::size_t points = static_cast<std::size_t>(n) * d;
  std::vector<Vertex> pairing(points);
  for (int attempt = 0; attempt < options.max_tries; ++attempt) {
    for (std::size_t p = 0; p < points; ++p) pairing[p] = static_cast<Vertex>(p / d);
    for (std::size_t p = points - 1; p > 0; --p) std::swap(pairing[p], pairing[rng.below(p + 1)]);
    std::vector<Edge> edges;
    edges.reserve(points / 2);
    for (std::size_t p = 0; p < points; p += 2) edges.emplace_back(pairing[p], pairing[p + 1]);

    SwitchingRepair repair(n, options.girth_min, std::move(edges));
    const std::int64_t budget = 64 * static_cast<std::int64_t>(points) + 1000;
    if (!repair.run(rng, budget)) continue;
    RegularGraph g = RegularGraph::from_edge_list(n, repair.edges());
    if (girth(g).value_or(std::numeric_limits<int>::max()) < options.girth_min) continue;
    if (options.require_nonbipartite && is_bipartite(g)) continue;
    return g;
  }
  fail(ErrorCode::kExhaustedTries, "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                                       " vertices with girth >= " + std::to_string(options.girth_min) +
                                       " after " + std::to_string(options.max_tries) + " tries");
}

}  // namespace polylab
