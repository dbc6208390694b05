#include "polylab/hdx.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

namespace polylab {

CliqueComplex2::CliqueComplex2(const SimpleGraph& g) : graph_(g), edges_(g.edges()) {
  const Vertex n = g.num_vertices();
  slot_edge_.assign(static_cast<std::size_t>(2 * edges_.size()), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    slot_edge_[static_cast<std::size_t>(g.slot_offset(u) + g.slot(u, v))] = static_cast<std::int64_t>(e);
    slot_edge_[static_cast<std::size_t>(g.slot_offset(v) + g.slot(v, u))] = static_cast<std::int64_t>(e);
  }
  std::vector<std::int64_t> count(edges_.size() + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*i > *j) {
          ++j;
        } else {
          triangles_.push_back({u, v, *i});
          ++i;
          ++j;
        }
      }
    }
  }
  for (const auto& t : triangles_) {
    ++count[static_cast<std::size_t>(edge_id(t[0], t[1]))];
    ++count[static_cast<std::size_t>(edge_id(t[1], t[2]))];
    ++count[static_cast<std::size_t>(edge_id(t[0], t[2]))];
  }
  edge_offsets_.assign(edges_.size() + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) edge_offsets_[e + 1] = edge_offsets_[e] + count[e];
  edge_triangles_.resize(static_cast<std::size_t>(edge_offsets_.back()));
  std::vector<std::int64_t> fill(edge_offsets_.begin(), edge_offsets_.end() - 1);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tr = triangles_[t];
    for (auto [a, b] : {std::pair{tr[0], tr[1]}, std::pair{tr[1], tr[2]}, std::pair{tr[0], tr[2]}}) {
      edge_triangles_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edge_id(a, b))]++)] =
          static_cast<std::int64_t>(t);
    }
  }
}

std::int64_t CliqueComplex2::edge_id(Vertex u, Vertex v) const {
  const auto s = graph_.slot(u, v);
  require(s >= 0, ErrorCode::kInvalidArgument, "not an edge");
  return slot_edge_[static_cast<std::size_t>(graph_.slot_offset(u) + s)];
}

std::map<std::int64_t, std::int64_t> triangles_per_edge(const CliqueComplex2& c) {
  std::map<std::int64_t, std::int64_t> hist;
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    ++hist[static_cast<std::int64_t>(c.triangles_of_edge(static_cast<std::int64_t>(e)).size())];
  }
  return hist;
}

AuxReport aux_graph(const CliqueComplex2& c, std::int64_t dense_edges, std::int64_t max_edges) {
  const auto m = static_cast<std::int64_t>(c.edges().size());
  if (m > max_edges) {
    fail(ErrorCode::kSizeLimit, "complex has " + std::to_string(m) + " edges, cap is " + std::to_string(max_edges));
  }
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(m));
  for (const auto& t : c.triangles()) {
    const auto e1 = static_cast<Vertex>(c.edge_id(t[0], t[1]));
    const auto e2 = static_cast<Vertex>(c.edge_id(t[1], t[2]));
    const auto e3 = static_cast<Vertex>(c.edge_id(t[0], t[2]));
    for (auto [x, y] : {std::pair{e1, e2}, std::pair{e2, e3}, std::pair{e1, e3}}) {
      adjacency[x].push_back(y);
      adjacency[y].push_back(x);
    }
  }
  AuxReport r;
  r.graph = SimpleGraph::from_adjacency(adjacency);
  for (Vertex v = 0; v < r.graph.num_vertices(); ++v) ++r.degree_histogram[r.graph.degree(v)];
  r.connected = is_connected(r.graph);
  r.degree = r.graph.common_degree();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.lambda2 = r.lambda_min = r.normalized_gap = nan;
  if (m == 0) return r;
  if (m <= dense_edges) {
    const auto ev = adjacency_eigenvalues(r.graph, static_cast<Vertex>(dense_edges));
    r.lambda_min = ev.front();
    r.lambda2 = ev.size() > 1 ? ev[ev.size() - 2] : ev.back();
  } else if (r.degree) {
    r.iterative = true;
    const auto lz = lanczos_extremes(r.graph, true);
    require(lz.converged, ErrorCode::kDomainError, "Lanczos iteration did not converge");
    r.lambda2 = lz.largest;
    r.lambda_min = lz.smallest;
  } else {
    return r;
  }
  if (r.degree && *r.degree > 0) r.normalized_gap = 1.0 - r.lambda2 / *r.degree;
  return r;
}

CenterPartition center_partition(const CliqueComplex2& c, const Polygraph& p) {
  require(p.S() == DistanceMultiset({0, 1, 1}), ErrorCode::kWrongS, "center partition needs S = [1, 1, 0]");
  require(p.girth_safe(), ErrorCode::kCenterUndefined, "base girth too small for unique centers");
  const auto& g = p.graph();
  const int d = p.base().degree();
  CenterPartition out;
  std::vector<std::vector<Vertex>> centers;
  centers.reserve(c.triangles().size());
  for (std::size_t t = 0; t < c.triangles().size(); ++t) {
    const auto& tr = c.triangles()[t];
    centers.push_back(center(p.metric(), g.label(tr[0]), g.label(tr[1]), g.label(tr[2])));
    out.classes[centers.back()].push_back(static_cast<std::int64_t>(t));
  }

  out.class_size = out.classes.empty() ? 0 : static_cast<std::int64_t>(out.classes.begin()->second.size());
  out.every_class_complete_tripartite = true;
  for (const auto& [x, ids] : out.classes) {
    if (static_cast<std::int64_t>(ids.size()) != out.class_size) out.class_size = -1;
    std::set<Vertex> vertices;
    std::set<Edge> edges;
    for (auto t : ids) {
      const auto& tr = c.triangles()[static_cast<std::size_t>(t)];
      vertices.insert(tr.begin(), tr.end());
      edges.insert({tr[0], tr[1]});
      edges.insert({tr[1], tr[2]});
      edges.insert({tr[0], tr[2]});
    }
    std::array<std::vector<Vertex>, 3> parts;
    bool ok = ids.size() == static_cast<std::size_t>(d) * d * d;
    for (Vertex v : vertices) {
      const auto profile = distance_profile(p.metric(), g.label(v), x);
      const int moved = static_cast<int>(std::count(profile.begin(), profile.end(), 1));
      const int fixed = static_cast<int>(std::count(profile.begin(), profile.end(), 0));
      if (moved != 1 || fixed != 2) {
        ok = false;
        continue;
      }
      parts[static_cast<std::size_t>(std::find(profile.begin(), profile.end(), 1) - profile.begin())].push_back(v);
    }
    for (const auto& part : parts) ok = ok && static_cast<int>(part.size()) == d;
    ok = ok && edges.size() == static_cast<std::size_t>(3 * d * d);
    for (int i = 0; i < 3 && ok; ++i) {
      for (int j = i + 1; j < 3 && ok; ++j) {
        for (Vertex u : parts[static_cast<std::size_t>(i)]) {
          for (Vertex v : parts[static_cast<std::size_t>(j)]) {
            ok = ok && edges.count({std::min(u, v), std::max(u, v)}) == 1;
          }
        }
      }
    }
    out.every_class_complete_tripartite = out.every_class_complete_tripartite && ok;
  }

  out.every_edge_in_two_classes = true;
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    std::set<std::vector<Vertex>> seen;
    for (auto t : c.triangles_of_edge(static_cast<std::int64_t>(e))) seen.insert(centers[static_cast<std::size_t>(t)]);
    std::set<std::vector<Vertex>> expected;
    for (const auto& mid : midpoints(p.metric(), g.label(c.edges()[e].first), g.label(c.edges()[e].second))) {
      expected.insert(mid);
    }
    if (seen.size() != 2 || seen != expected) {
      out.every_edge_in_two_classes = false;
      break;
    }
  }
  return out;
}

std::vector<std::int64_t> midpoint_multiset(const Polygraph& p) {
  const auto& g = p.graph();
  std::vector<std::int64_t> count(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& [u, v] : g.edges()) {
    for (Vertex m : midpoints(p, u, v)) ++count[m];
  }
  return count;
}

std::int64_t kddd_triangle_floor(std::int64_t d, std::int64_t w) {
  require(d >= 1 && w >= 0 && w <= 3 * d * d, ErrorCode::kInvalidArgument, "need 0 <= w <= 3 d^2");
  return d * std::max<std::int64_t>(0, w - 2 * d * d);
}

std::vector<std::int64_t> kddd_triangle_minimum(int d) {
  require(d >= 1 && d <= 2, ErrorCode::kTooLarge, "exhaustive search limited to d <= 2");
  // Parts {0..d-1}, {d..2d-1}, {2d..3d-1}.
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) edges.emplace_back(i * d + x, j * d + y);
      }
    }
  }
  auto edge_index = [&](Vertex u, Vertex v) {
    return static_cast<int>(std::find(edges.begin(), edges.end(), Edge{std::min(u, v), std::max(u, v)}) - edges.begin());
  };
  std::vector<std::uint32_t> triangle_masks;
  for (int x = 0; x < d; ++x) {
    for (int y = d; y < 2 * d; ++y) {
      for (int z = 2 * d; z < 3 * d; ++z) {
        triangle_masks.push_back((1u << edge_index(x, y)) | (1u << edge_index(y, z)) | (1u << edge_index(x, z)));
      }
    }
  }
  const int m = static_cast<int>(edges.size());
  std::vector<std::int64_t> best(static_cast<std::size_t>(m) + 1, std::numeric_limits<std::int64_t>::max());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::int64_t count = 0;
    for (auto t : triangle_masks) count += (mask & t) == t;
    auto& slot = best[static_cast<std::size_t>(std::popcount(mask))];
    slot = std::min(slot, count);
  }
  return best;
}

namespace {

int distinguished_value(const DistanceMultiset& s) {
  if (s == DistanceMultiset({0, 1, 1})) return 0;
  if (s == DistanceMultiset({1, 1, 2})) return 2;
  fail(ErrorCode::kWrongS, "coboundary witness needs S = [1, 1, 0] or [1, 1, 2], got [" + s.to_string() + "]");
}

}  // namespace

WitnessReport coboundary_witness(const Polygraph& p) {
  const int special = distinguished_value(p.S());
  require(!is_bipartite(p.base()), ErrorCode::kBipartiteBase, "base graph is bipartite");
  const auto& g = p.graph();
  auto in_a = [&](Vertex u, Vertex v) { return distance_profile(p, u, v)[0] != special; };

  WitnessReport r;
  for (const auto& [u, v] : g.edges()) r.set_size += in_a(u, v);
  for_each_triangle(p, [&](const TriangleRecord& t) {
    ++r.property_1_checked;
    const int hits = (t.profiles[0][0] != special) + (t.profiles[1][0] != special) + (t.profiles[2][0] != special);
    if (hits != 2) ++r.violations;
  });

  const auto base_cycle = shortest_odd_cycle(p.base());
  const auto len = static_cast<std::size_t>(base_cycle.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex third = special == 0 ? base_cycle[0] : base_cycle[(2 * i) % len];
    const std::array<Vertex, 3> t{base_cycle[i], base_cycle[i], third};
    r.odd_cycle.push_back(p.encode(t));
  }
  bool valid = len % 2 == 1;
  for (std::size_t i = 0; i < len && valid; ++i) {
    const Vertex u = r.odd_cycle[i], v = r.odd_cycle[(i + 1) % len];
    valid = g.has_edge(u, v) && in_a(u, v);
  }
  // A cut spans a bipartite subgraph, so an odd cycle inside A rules it out.
  r.is_cut = !valid;
  if (!valid) r.odd_cycle.clear();
  return r;
}

DiscrepancyReport discrepancy_witness(const Polygraph& p, std::span<const Vertex> subset) {
  require(p.S().contains(0), ErrorCode::kZeroNotInS, "S must contain 0");
  const auto& base = p.base();
  std::vector<char> in(static_cast<std::size_t>(base.num_vertices()), 0);
  for (Vertex v : subset) {
    require(v >= 0 && v < base.num_vertices(), ErrorCode::kIndexOutOfRange, "subset vertex out of range");
    in[v] = 1;
  }
  const auto& g = p.graph();
  // side: 1 = all coordinates in A, 2 = none in A, 0 = mixed.
  std::vector<char> side(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    bool all = true, none = true;
    for (Vertex c : g.label(x)) {
      all = all && in[c];
      none = none && !in[c];
    }
    side[x] = all ? 1 : (none ? 2 : 0);
  }
  DiscrepancyReport r;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (side[x] == 1) r.inside.push_back(x);
    if (side[x] == 2) r.outside.push_back(x);
  }
  for (const auto& [u, v] : g.edges()) r.cross_edges += (side[u] | side[v]) == 3;
  return r;
}

OverlapBound overlap_bound_calculator(const OverlapInputs& in) {
  require(in.d >= 3 && in.n > 0 && in.lambda >= 0, ErrorCode::kInvalidArgument, "need d >= 3, n > 0, lambda >= 0");
  const double d = in.d;
  const double total_vertices = in.n * in.n * in.n;
  const double a = in.size_a > 0 ? in.size_a : total_vertices / 6;
  const double b = in.size_b > 0 ? in.size_b : total_vertices / 6;
  const double c = in.size_c > 0 ? in.size_c : total_vertices / 6;
  OverlapBound r;
  r.mu = std::max(in.lambda, 2 * std::sqrt(d - 1));
  const double degree_123 = 6 * std::pow(d, 3) * std::pow(d - 1, 3);
  const double lambda_123 = 6 * r.mu * d * d * std::pow(d - 1, 3);
  r.w_max = in.w_max.value_or(degree_123);
  const double spread_ab = lambda_123 * std::sqrt(a * b * (1 - a / total_vertices) * (1 - b / total_vertices));
  r.edges_ab = degree_123 * a * b / total_vertices - spread_ab;
  r.midpoint_mass = 2 * std::max(0.0, r.edges_ab);
  const double squares = r.midpoint_mass * r.w_max;
  const double spread_mc = r.mu * d * d *
                           std::sqrt(std::max(0.0, squares - r.midpoint_mass * r.midpoint_mass / total_vertices) *
                                     c * (1 - c / total_vertices));
  r.edges_mc = d * d * d * r.midpoint_mass * c / total_vertices - spread_mc;
  const double lost_per_midpoint = d * d * d - (d - 1) * (d - 1) * (d - 2);
  r.triangles = r.edges_mc - lost_per_midpoint * r.midpoint_mass;
  const double b_123 = 2 * (d - 1) * (d - 1) * (4 * d - 7);
  r.total_triangles = degree_123 * b_123 * total_vertices / 6;
  r.fraction = r.triangles / r.total_triangles;
  return r;
}

}  // namespace polylab
