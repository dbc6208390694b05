#include "polylab/metric.hpp"

#include <limits>

namespace polylab {

namespace {
constexpr std::uint16_t kFar = std::numeric_limits<std::uint16_t>::max();
}

GraphMetric::GraphMetric(std::shared_ptr<const SimpleGraph> graph) : graph_(std::move(graph)) {
  const Vertex n = graph_->num_vertices();
  if (n > kTableLimit) return;
  table_.assign(static_cast<std::size_t>(n) * n, kFar);
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_distances(*graph_, s);
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] != kUnreachable) table_[static_cast<std::size_t>(s) * n + t] = static_cast<std::uint16_t>(dist[t]);
    }
  }
}

int GraphMetric::distance(Vertex u, Vertex v) const {
  const Vertex n = graph_->num_vertices();
  require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::kIndexOutOfRange, "vertex out of range");
  if (!table_.empty()) {
    const auto x = table_[static_cast<std::size_t>(u) * n + v];
    return x == kFar ? kUnreachable : x;
  }
  if (u == v) return 0;
  return bfs_distances(*graph_, u)[v];
}

Vertex GraphMetric::next_hop(Vertex u, Vertex v) const {
  const int duv = distance(u, v);
  require(duv > 0, ErrorCode::kInvalidArgument, "next_hop needs distinct connected vertices");
  if (table_.empty()) {
    auto dist = bfs_distances(*graph_, v);
    for (Vertex w : graph_->neighbors(u)) {
      if (dist[w] == duv - 1) return w;
    }
  } else {
    for (Vertex w : graph_->neighbors(u)) {
      if (distance(w, v) == duv - 1) return w;
    }
  }
  fail(ErrorCode::kInvalidArgument, "inconsistent metric");
}

Vertex GraphMetric::walk_toward(Vertex u, Vertex v, int steps) const {
  Vertex at = u;
  for (int i = 0; i < steps; ++i) at = next_hop(at, v);
  return at;
}

std::vector<Vertex> GraphMetric::geodesic(Vertex u, Vertex v) const {
  const int duv = distance(u, v);
  require(duv != kUnreachable, ErrorCode::kDisconnected, "vertices in different components");
  std::vector<Vertex> path{u};
  while (path.back() != v) path.push_back(next_hop(path.back(), v));
  return path;
}

Vertex GraphMetric::center(Vertex x, Vertex y, Vertex z) const {
  const int xy = distance(x, y), yz = distance(y, z), xz = distance(x, z);
  require(xy != kUnreachable && yz != kUnreachable && xz != kUnreachable, ErrorCode::kCenterUndefined,
          "points in different components");
  const int total = xy + yz + xz;
  if (total % 2 != 0 || xy + xz < yz || xy + yz < xz || xz + yz < xy) {
    fail(ErrorCode::kCenterUndefined, "distances do not form a tree triangle");
  }
  const Vertex c = walk_toward(x, y, (xy + xz - yz) / 2);
  if (distance(x, c) + distance(y, c) + distance(z, c) != total / 2) {
    fail(ErrorCode::kCenterUndefined, "no common center on the geodesic");
  }
  return c;
}

}  // namespace polylab
