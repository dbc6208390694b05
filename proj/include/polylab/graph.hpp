#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polylab/error.hpp"

namespace polylab {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = -1;

// Undirected simple graph stored as sorted adjacency arrays (CSR).
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Validates: indices in range, no self-loops, no duplicates, symmetric.
  static SimpleGraph from_edges(Vertex n, std::span<const Edge> edges);
  static SimpleGraph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);
  // Neighbor lists must already be sorted per vertex.
  static SimpleGraph from_csr(std::vector<std::int64_t> offsets, std::vector<Vertex> targets);

  Vertex num_vertices() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(targets_.size()) / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  // Position of v within neighbors(u), or -1.
  std::int64_t slot(Vertex u, Vertex v) const;
  std::int64_t slot_offset(Vertex v) const { return offsets_[v]; }

  std::optional<Vertex> common_degree() const;

 private:
  void validate() const;

  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> targets_;
};

class RegularGraph : public SimpleGraph {
 public:
  RegularGraph() = default;
  explicit RegularGraph(SimpleGraph graph);

  static RegularGraph from_edge_list(Vertex n, std::span<const Edge> edges);

  using SimpleGraph::degree;
  Vertex degree() const { return degree_; }

  // Optional integer tuple attached to each vertex (e.g. coordinates of a product vertex).
  int label_width() const { return label_width_; }
  std::span<const std::int32_t> label(Vertex v) const {
    return {labels_.data() + static_cast<std::size_t>(v) * label_width_, static_cast<std::size_t>(label_width_)};
  }
  void set_labels(std::vector<std::int32_t> flat, int width);

 private:
  Vertex degree_ = 0;
  int label_width_ = 0;
  std::vector<std::int32_t> labels_;
};

// Bipartite graph with parts L = [0, left) and R = [left, n); every left vertex has
// degree c and every right vertex has degree d.
class BipartiteBiregularGraph {
 public:
  BipartiteBiregularGraph(SimpleGraph graph, Vertex left_size);

  const SimpleGraph& graph() const { return graph_; }
  Vertex left_size() const { return left_; }
  Vertex right_size() const { return graph_.num_vertices() - left_; }
  Vertex left_degree() const { return c_; }
  Vertex right_degree() const { return d_; }

 private:
  SimpleGraph graph_;
  Vertex left_ = 0;
  Vertex c_ = 0;
  Vertex d_ = 0;
};

// Breadth-first distances from source; unreachable vertices get kUnreachable.
// With max_depth >= 0 the search stops at that depth.
std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source, int max_depth = -1);

std::vector<Vertex> connected_components(const SimpleGraph& g, Vertex* count = nullptr);
bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

// Vertices of a shortest odd cycle in order, or empty when bipartite.
std::vector<Vertex> shortest_odd_cycle(const SimpleGraph& g);

// Eccentricity of source; kUnreachable if the graph is disconnected.
int eccentricity(const SimpleGraph& g, Vertex source);
// Exact diameter by BFS from every vertex; kUnreachable if disconnected.
int diameter(const SimpleGraph& g);

// Induced subgraph on the given vertices (renumbered in the given order).
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> vertices);

// If every edge lies in exactly b triangles, returns b.
std::optional<std::int64_t> common_neighbor_count(const SimpleGraph& g);

// Edge-list text format: header "n d", then one "u v" line per edge with u < v.
void write_edge_list(std::ostream& out, const RegularGraph& g);
std::string to_edge_list(const RegularGraph& g);
RegularGraph read_edge_list(std::istream& in);
RegularGraph parse_edge_list(const std::string& text);
RegularGraph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const RegularGraph& g);

}  // namespace polylab
