#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polylab/bigint.hpp"
#include "polylab/graph.hpp"
#include "polylab/limits.hpp"
#include "polylab/polygraph.hpp"
#include "polylab/spectrum.hpp"

namespace polylab {

// Ball of the given radius around the root (vertex 0) of the infinite d-regular tree,
// numbered in BFS order so every level is a contiguous range.
class TreeBall {
 public:
  TreeBall(int d, int radius);

  int d() const { return d_; }
  int radius() const { return radius_; }
  Vertex size() const { return static_cast<Vertex>(parent_.size()); }
  int depth(Vertex v) const { return depth_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  Vertex level_begin(int r) const { return level_start_[r]; }
  Vertex level_end(int r) const { return level_start_[r + 1]; }
  // k-th child (0-based) of v; the root has d children, other vertices d - 1.
  Vertex child(Vertex v, int k) const { return first_child_[v] + k; }
  int child_count(Vertex v) const { return v == 0 ? d_ : d_ - 1; }

  int distance(Vertex u, Vertex v) const;
  SimpleGraph graph() const;

 private:
  int d_;
  int radius_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<Vertex> first_child_;
  std::vector<Vertex> level_start_;
};

struct LocalGapBounds {
  int p = 0;
  int q = 0;
  int d = 0;
  BigInt b_S;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double gamma = 0.0;
  // Natural logarithms of beta2 and of the path-count lower bound, which underflow quickly.
  double log_beta2 = 0.0;
  double log_path_count = 0.0;
};

// Lower bounds on the normalized spectral gap of the [p, q, p+q] link (p, q even, p < q, d >= 3).
LocalGapBounds local_gap_bounds(int p, int q, int d);

struct LinkOptions {
  std::int64_t max_vertices = default_limits().link_vertices;
  bool compute_spectrum = true;
  // Larger links get lambda2 / lambda_min by Lanczos instead of a full spectrum.
  Vertex dense_limit = 4000;
  bool compute_diameter = true;
};

struct LinkReport {
  DistanceMultiset S;
  int d = 0;
  BigInt a_S;
  BigInt b_S;
  // Vertex labels are the tree-ball ids of the coordinates.
  RegularGraph graph;
  Vertex components = 0;
  bool connected = false;
  // kUnreachable when disconnected or not computed.
  int diameter = kUnreachable;
  std::optional<SpectrumReport> spectrum;
  std::optional<LocalGapBounds> gap_bounds;
};

// Link of a vertex in the polygraph over the d-regular tree: tuples whose depth profile is an
// ordering of S, adjacent when their distance profile is an ordering of S.
LinkReport build_link_via_tree(const DistanceMultiset& s, int d, const LinkOptions& options = {});

// Degrees of one representative link vertex per depth ordering, without building the link.
std::vector<std::int64_t> link_representative_degrees(const DistanceMultiset& s, int d);

// Induced subgraph on the neighborhood of x.
RegularGraph link_of_vertex(const Polygraph& p, Vertex x);

bool link_connected_m2(int p, int q);
bool link_connected_m3(int p, int q, int r);

// 1 / (2 * diameter); the graph is assumed vertex-transitive.
double aldous_expansion_bound(int diameter);
double aldous_expansion_bound(const SimpleGraph& link);

// Integer eigenvectors of the [0, 1, 1] link grouped by eigenvalue.
struct EigenCertificate {
  std::int64_t eigenvalue = 0;
  std::vector<std::vector<std::int64_t>> vectors;
};

std::vector<EigenCertificate> link_110_certificates(const LinkReport& link);

struct CertificateCheck {
  bool all_eigenvectors = false;
  std::int64_t rank = 0;  // rank over Q of all vectors together
  std::int64_t total = 0;
};

CertificateCheck verify_certificates(const SimpleGraph& g, const std::vector<EigenCertificate>& certs);

}  // namespace polylab
