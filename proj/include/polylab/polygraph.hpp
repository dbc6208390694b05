#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polylab/bigint.hpp"
#include "polylab/graph.hpp"
#include "polylab/limits.hpp"
#include "polylab/metric.hpp"

namespace polylab {

// Multiset of non-negative distances, kept sorted ascending.
class DistanceMultiset {
 public:
  DistanceMultiset() = default;
  explicit DistanceMultiset(std::vector<int> entries);
  // Comma separated, e.g. "1,1,0".
  static DistanceMultiset parse(const std::string& text);

  int m() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int sum() const;
  int max() const { return entries_.back(); }
  int min() const { return entries_.front(); }
  bool contains(int value) const;
  // Number of distinct values.
  int distinct() const;

  // All distinct orderings, lexicographic.
  std::vector<std::vector<int>> arrangements() const;
  BigInt arrangement_count() const;
  bool is_arrangement(std::span<const int> profile) const;

  std::string to_string() const;

  friend bool operator==(const DistanceMultiset&, const DistanceMultiset&) = default;

 private:
  std::vector<int> entries_;
};

// Number of vertices at distance l from a vertex of the infinite d-regular tree.
BigInt sphere_size(int d, int l);

// Degree of the polygraph over a d-regular base of large girth.
BigInt a_S(const DistanceMultiset& s, int d);

// Common neighbors of two adjacent polygraph vertices over a d-regular base of large girth.
BigInt b_S(const DistanceMultiset& s, int d);

// Count of z at distance j from x and k from y in the d-regular tree when d(x, y) = i.
BigInt tree_triangle_count(int d, int i, int j, int k);

// A 3 x m integer matrix whose rows are orderings of S (the first row is S itself) and
// whose columns each have even sum and satisfy the triangle inequality.
struct TriangleMatrix {
  std::array<std::vector<int>, 3> rows;
};

struct BPositiveResult {
  bool positive = false;
  std::optional<TriangleMatrix> witness;
};

BPositiveResult b_S_positive(const DistanceMultiset& s);
// Closed-form decision for S = [p, q, r] with p <= q <= r.
bool b_S_positive_m3(int p, int q, int r);
bool is_triangle_column(int i, int j, int k);

struct PolygraphOptions {
  bool allow_unsafe_girth = false;
  SizeLimits limits = default_limits();
};

class Polygraph {
 public:
  const RegularGraph& base() const { return *base_; }
  const GraphMetric& metric() const { return *metric_; }
  const DistanceMultiset& S() const { return s_; }
  const RegularGraph& graph() const { return graph_; }
  bool girth_safe() const { return girth_safe_; }
  std::optional<int> base_girth() const { return base_girth_; }

  BigInt a_S() const;
  BigInt b_S() const;

  Vertex encode(std::span<const Vertex> tuple) const;
  std::vector<Vertex> decode(Vertex v) const;

 private:
  friend Polygraph build_polygraph(const RegularGraph& base, const DistanceMultiset& s, const PolygraphOptions& opt);

  std::shared_ptr<const RegularGraph> base_;
  std::shared_ptr<const GraphMetric> metric_;
  DistanceMultiset s_;
  RegularGraph graph_;
  bool girth_safe_ = false;
  std::optional<int> base_girth_;
};

// Vertices are tuples in V(base)^m (first coordinate most significant); x ~ y when the
// multiset of coordinate distances equals S. Requires girth > 3 max(S) unless overridden.
Polygraph build_polygraph(const RegularGraph& base, const DistanceMultiset& s, const PolygraphOptions& opt = {});

// Ordered coordinate distances between two tuples.
std::vector<int> distance_profile(const GraphMetric& metric, std::span<const Vertex> x, std::span<const Vertex> y);
std::vector<int> distance_profile(const Polygraph& p, Vertex x, Vertex y);

// Coordinatewise tree center of a triangle.
std::vector<Vertex> center(const GraphMetric& metric, std::span<const Vertex> x, std::span<const Vertex> y,
                           std::span<const Vertex> z);
std::vector<Vertex> center(const Polygraph& p, Vertex x, Vertex y, Vertex z);

// Tuples m on coordinatewise geodesics with distance delta(x, y) / 2 to both ends.
std::vector<std::vector<Vertex>> midpoints(const GraphMetric& metric, std::span<const Vertex> x,
                                           std::span<const Vertex> y);
std::vector<Vertex> midpoints(const Polygraph& p, Vertex x, Vertex y);

// Directed midpoint of an edge u -> v whose profile is an ordering of (1, 2, 3): keep u on the
// distance-1 coordinate, v on the distance-2 coordinate, and step once from u toward v on the
// distance-3 coordinate.
std::vector<Vertex> midpoint_123(const GraphMetric& metric, std::span<const Vertex> u, std::span<const Vertex> v);

struct MidpointFan {
  std::int64_t neighbors = 0;   // tuples at profile (1, 1, 1) from the midpoint
  std::int64_t completing = 0;  // of those, ones at a (1, 2, 3) profile from both u and v
};

MidpointFan midpoint_fan(const GraphMetric& metric, std::span<const Vertex> u, std::span<const Vertex> v);

struct TriangleRecord {
  std::array<Vertex, 3> vertices{};                // ascending
  std::array<std::vector<int>, 3> profiles;        // (v0,v1), (v1,v2), (v0,v2)
  std::vector<Vertex> center;                      // empty when the base girth is unsafe
};

void for_each_triangle(const Polygraph& p, const std::function<void(const TriangleRecord&)>& visit);
std::vector<TriangleRecord> enumerate_triangles(const Polygraph& p);
std::int64_t count_triangles(const SimpleGraph& g);

}  // namespace polylab
