#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "polylab/graph.hpp"

namespace polylab {

// Shortest-path metric of a graph. Small graphs get an all-pairs table,
// larger ones answer each query with a fresh BFS.
class GraphMetric {
 public:
  static constexpr Vertex kTableLimit = 2048;

  explicit GraphMetric(std::shared_ptr<const SimpleGraph> graph);

  const SimpleGraph& graph() const { return *graph_; }

  // kUnreachable when u and v lie in different components.
  int distance(Vertex u, Vertex v) const;
  // Smallest-index neighbor of u that is one step closer to v (u != v).
  Vertex next_hop(Vertex u, Vertex v) const;
  // Vertex reached after `steps` steps from u toward v.
  Vertex walk_toward(Vertex u, Vertex v, int steps) const;
  std::vector<Vertex> geodesic(Vertex u, Vertex v) const;

  // Vertex c with d(x,c) + d(y,c) + d(z,c) = (d(x,y) + d(y,z) + d(x,z)) / 2, found by walking
  // from x toward y. Throws kCenterUndefined if no such vertex exists on that path.
  Vertex center(Vertex x, Vertex y, Vertex z) const;

 private:
  std::shared_ptr<const SimpleGraph> graph_;
  std::vector<std::uint16_t> table_;
};

}  // namespace polylab
