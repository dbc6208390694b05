#pragma once

// Slow reference implementations used to cross-check the library. They only use the edge
// list of a graph and never call into the routines under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "polylab/bigint.hpp"
#include "polylab/graph.hpp"

namespace oracle {

using polylab::BigInt;
using polylab::Vertex;
using Matrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

inline std::vector<std::vector<int>> adjacency_lists(const polylab::SimpleGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline Matrix adjacency_matrix(const polylab::SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  Matrix a(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

// Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs(const polylab::SimpleGraph& g) {
  const int n = g.num_vertices();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Girth as the shortest cycle through some edge: remove it and measure the detour.
inline int girth(const polylab::SimpleGraph& g) {
  auto adj = adjacency_lists(g);
  int best = -1;
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[v] > 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best;
}

// Number of non-backtracking walks of length t from s to every vertex, by explicit DFS.
inline std::vector<std::int64_t> nbw_counts_from(const polylab::SimpleGraph& g, int s, int t) {
  auto adj = adjacency_lists(g);
  std::vector<std::int64_t> counts(adj.size(), 0);
  std::function<void(int, int, int)> walk = [&](int at, int prev, int left) {
    if (left == 0) {
      ++counts[at];
      return;
    }
    for (int y : adj[at])
      if (y != prev) walk(y, at, left - 1);
  };
  walk(s, -1, t);
  return counts;
}

inline BigMatrix big_multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size();
  BigMatrix c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// trace(A^t) for t = 0..t_max using repeated exact multiplication.
inline std::vector<BigInt> traces(const polylab::SimpleGraph& g, int t_max) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  BigMatrix base(n, std::vector<BigInt>(n, 0)), power(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    power[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) base[i][j] = a[i][j];
  }
  std::vector<BigInt> out;
  for (int t = 0; t <= t_max; ++t) {
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
    out.push_back(tr);
    if (t < t_max) power = big_multiply(power, base);
  }
  return out;
}

// Power sums of an eigenvalue list.
inline double power_sum(const std::vector<double>& values, int k) {
  double s = 0.0;
  for (double v : values) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= v;
    s += p;
  }
  return s;
}

// Distances in the ball of radius r of the d-regular tree, built from scratch.
struct Tree {
  std::vector<int> parent;
  std::vector<int> depth;

  Tree(int d, int r) {
    parent.push_back(-1);
    depth.push_back(0);
    std::size_t begin = 0;
    for (int level = 1; level <= r; ++level) {
      const std::size_t end = parent.size();
      for (std::size_t v = begin; v < end; ++v) {
        const int kids = v == 0 ? d : d - 1;
        for (int k = 0; k < kids; ++k) {
          parent.push_back(static_cast<int>(v));
          depth.push_back(level);
        }
      }
      begin = end;
    }
  }

  int size() const { return static_cast<int>(parent.size()); }

  int distance(int u, int v) const {
    int steps = 0;
    while (u != v) {
      if (depth[u] >= depth[v]) {
        u = parent[u];
      } else {
        v = parent[v];
      }
      ++steps;
    }
    return steps;
  }
};

// |{z : d(x,z) = j, d(y,z) = k}| in the d-regular tree with d(x,y) = i, counted in a ball.
inline std::int64_t tree_common(int d, int i, int j, int k) {
  const Tree t(d, i + std::max(j, k) + 1);
  int y = 0;
  // walk down the first child chain to reach depth i
  for (int level = 0; level < i; ++level) {
    int next = -1;
    for (int v = 0; v < t.size(); ++v)
      if (t.parent[v] == y) {
        next = v;
        break;
      }
    y = next;
  }
  std::int64_t count = 0;
  for (int z = 0; z < t.size(); ++z)
    if (t.distance(0, z) == j && t.distance(y, z) == k) ++count;
  return count;
}

// Sorted multiset equality helper.
inline bool same_multiset(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Exhaustive search for a 3 x m matrix: rows are orderings of s (row 0 fixed), every column has
// even sum and satisfies the triangle inequality.
inline bool triangle_matrix_exists(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  std::vector<std::vector<int>> perms;
  std::vector<int> p = s;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (const auto& r1 : perms)
    for (const auto& r2 : perms) {
      bool ok = true;
      for (std::size_t c = 0; c < s.size() && ok; ++c) {
        const int a = s[c], b = r1[c], e = r2[c];
        ok = (a + b + e) % 2 == 0 && a <= b + e && b <= a + e && e <= a + b;
      }
      if (ok) return true;
    }
  return false;
}

// Brute-force minimum number of triangles of K_{d,d,d} spanned by w chosen edges, w = 0..3d^2.
inline std::vector<std::int64_t> kddd_minimum(int d) {
  std::vector<std::pair<int, int>> edges;
  const int n = 3 * d;
  auto part = [d](int v) { return v / d; };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part(u) != part(v)) edges.emplace_back(u, v);
  const int e = static_cast<int>(edges.size());
  std::vector<std::int64_t> best(static_cast<std::size_t>(e) + 1, INT64_MAX);
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    std::vector<std::vector<bool>> on(n, std::vector<bool>(n, false));
    for (int i = 0; i < e; ++i)
      if (mask >> i & 1u) on[edges[i].first][edges[i].second] = on[edges[i].second][edges[i].first] = true;
    std::int64_t tri = 0;
    for (int a = 0; a < d; ++a)
      for (int b = d; b < 2 * d; ++b)
        for (int c = 2 * d; c < 3 * d; ++c)
          if (on[a][b] && on[b][c] && on[a][c]) ++tri;
    const int w = __builtin_popcount(mask);
    best[w] = std::min(best[w], tri);
  }
  return best;
}

}  // namespace oracle
