#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polylab/graph.hpp"
#include "polylab/polygraph.hpp"
#include "polylab/spectrum.hpp"

namespace polylab {

using Triangle = std::array<Vertex, 3>;

// 2-dimensional clique complex: edges in SimpleGraph::edges() order, triangles ascending.
class CliqueComplex2 {
 public:
  explicit CliqueComplex2(const SimpleGraph& g);

  const SimpleGraph& graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  std::int64_t edge_id(Vertex u, Vertex v) const;
  std::span<const std::int64_t> triangles_of_edge(std::int64_t e) const {
    return {edge_triangles_.data() + edge_offsets_[e],
            static_cast<std::size_t>(edge_offsets_[e + 1] - edge_offsets_[e])};
  }

 private:
  SimpleGraph graph_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> slot_edge_;  // edge id per adjacency slot
  std::vector<Triangle> triangles_;
  std::vector<std::int64_t> edge_offsets_;
  std::vector<std::int64_t> edge_triangles_;
};

// Triangle count -> number of edges with that count.
std::map<std::int64_t, std::int64_t> triangles_per_edge(const CliqueComplex2& c);

struct AuxReport {
  SimpleGraph graph;  // vertices are edge ids of the complex
  std::map<Vertex, std::int64_t> degree_histogram;
  bool connected = false;
  std::optional<Vertex> degree;  // set when regular
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double normalized_gap = 0.0;
  bool iterative = false;
};

// Graph on edges, e ~ f when e and f span a triangle. Dense spectrum up to
// dense_edges vertices, Lanczos beyond (regular case only). Larger than max_edges throws.
AuxReport aux_graph(const CliqueComplex2& c, std::int64_t dense_edges = 4000, std::int64_t max_edges = 50'000);

struct CenterPartition {
  std::map<std::vector<Vertex>, std::vector<std::int64_t>> classes;  // center -> triangle ids
  bool every_class_complete_tripartite = false;
  std::int64_t class_size = 0;         // common |T_x|, or -1 when sizes differ
  bool every_edge_in_two_classes = false;
};

// S = [1, 1, 0]: groups triangles by center and checks each class is a complete tripartite
// K_{d,d,d} and that every edge lies in exactly two classes (those of its midpoints).
CenterPartition center_partition(const CliqueComplex2& c, const Polygraph& p);

// count[x] = number of edges having x as one of their midpoints (S = [1, 1, 0]).
std::vector<std::int64_t> midpoint_multiset(const Polygraph& p);

// Lower bound on the triangles of K_{d,d,d} spanned by w of its edges: d * max(0, w - 2 d^2).
std::int64_t kddd_triangle_floor(std::int64_t d, std::int64_t w);
// Exact minimum over all w-edge subsets of K_{d,d,d}, for w = 0..3d^2 (d <= 2).
std::vector<std::int64_t> kddd_triangle_minimum(int d);

struct WitnessReport {
  std::int64_t property_1_checked = 0;  // triangles inspected
  std::int64_t violations = 0;          // triangles without exactly two edges in A
  std::vector<Vertex> odd_cycle;        // polygraph vertices, every edge in A
  bool is_cut = true;
  std::int64_t set_size = 0;            // |A|
};

// S = [1, 1, 0] or [1, 1, 2]: A = edges whose distinguished coordinate (the one holding the
// value that appears once) is not the first.
WitnessReport coboundary_witness(const Polygraph& p);

struct DiscrepancyReport {
  std::vector<Vertex> inside;   // A^m
  std::vector<Vertex> outside;  // (V \ A)^m
  std::int64_t cross_edges = 0;
};

// Edges between A^m and (V \ A)^m, counted by a full scan; zero whenever 0 is in S.
DiscrepancyReport discrepancy_witness(const Polygraph& p, std::span<const Vertex> subset);

struct OverlapInputs {
  double n = 1000;
  int d = 1600;
  double lambda = 80;
  double size_a = 0, size_b = 0, size_c = 0;  // default n^3 / 6 each
  // Most directed [1,2,3] edges sharing a midpoint; default 6 d^3 (d-1)^3.
  std::optional<double> w_max;
};

struct OverlapBound {
  double mu = 0.0;
  double edges_ab = 0.0;        // lower bound on E(A, B) in the [1,2,3] polygraph
  double midpoint_mass = 0.0;   // |M| = 2 E(A, B)
  double edges_mc = 0.0;        // lower bound on E(M, C) in the [1,1,1] polygraph
  double triangles = 0.0;       // |T(A,B,C)| lower bound
  double total_triangles = 0.0;
  double fraction = 0.0;
  double w_max = 0.0;
};

OverlapBound overlap_bound_calculator(const OverlapInputs& in);

}  // namespace polylab
