#include "polylab/polygraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace polylab {

SizeLimits default_limits() {
  SizeLimits limits;
  if (const char* env = std::getenv(kMaxVerticesEnv)) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      limits.polygraph_vertices = v;
      limits.link_vertices = v;
    }
  }
  return limits;
}

DistanceMultiset::DistanceMultiset(std::vector<int> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), ErrorCode::kInvalidArgument, "distance multiset must be non-empty");
  for (int x : entries_) require(x >= 0, ErrorCode::kInvalidArgument, "distances must be non-negative");
  std::sort(entries_.begin(), entries_.end());
}

DistanceMultiset DistanceMultiset::parse(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t[]");
    const auto last = item.find_last_not_of(" \t[]");
    if (first == std::string::npos) fail(ErrorCode::kParse, "empty entry in \"" + text + "\"");
    const std::string token = item.substr(first, last - first + 1);
    char* end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (*end != '\0' || v < 0 || v > 1000) fail(ErrorCode::kParse, "bad distance \"" + token + "\"");
    values.push_back(static_cast<int>(v));
  }
  require(!values.empty(), ErrorCode::kParse, "empty distance multiset");
  return DistanceMultiset(std::move(values));
}

int DistanceMultiset::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DistanceMultiset::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

int DistanceMultiset::distinct() const {
  std::vector<int> copy = entries_;
  return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

std::vector<std::vector<int>> DistanceMultiset::arrangements() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur = entries_;
  do {
    out.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

BigInt DistanceMultiset::arrangement_count() const {
  BigInt r = factorial(m());
  std::size_t i = 0;
  while (i < entries_.size()) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

bool DistanceMultiset::is_arrangement(std::span<const int> profile) const {
  if (profile.size() != entries_.size()) return false;
  std::vector<int> sorted(profile.begin(), profile.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted == entries_;
}

std::string DistanceMultiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

BigInt sphere_size(int d, int l) {
  if (l == 0) return 1;
  return BigInt(d) * power(BigInt(d - 1), static_cast<unsigned>(l - 1));
}

BigInt a_S(const DistanceMultiset& s, int d) {
  require(d >= 2, ErrorCode::kInvalidArgument, "degree must be at least 2");
  BigInt r = s.arrangement_count();
  for (int l : s.entries()) r *= sphere_size(d, l);
  return r;
}

BigInt tree_triangle_count(int d, int i, int j, int k) {
  if (i == 0) return j == k ? sphere_size(d, j) : BigInt(0);
  if ((i + j + k) % 2 != 0) return 0;
  const int half = (i + j + k) / 2;
  const int top = std::max({i, j, k});
  if (half < top) return 0;
  const int e = (j + k - i) / 2;
  if (half == top) return power(BigInt(d - 1), static_cast<unsigned>(e));
  return BigInt(d - 2) * power(BigInt(d - 1), static_cast<unsigned>(e - 1));
}

BigInt b_S(const DistanceMultiset& s, int d) {
  require(d >= 2, ErrorCode::kInvalidArgument, "degree must be at least 2");
  const auto omega = s.arrangements();
  const auto& l = s.entries();
  BigInt total = 0;
  for (const auto& w : omega) {
    for (const auto& w2 : omega) {
      BigInt term = 1;
      for (int j = 0; j < s.m() && term != 0; ++j) term *= tree_triangle_count(d, l[j], w[j], w2[j]);
      total += term;
    }
  }
  return total;
}

bool is_triangle_column(int i, int j, int k) {
  return (i + j + k) % 2 == 0 && i <= j + k && j <= i + k && k <= i + j;
}

namespace {

bool fill_third_row(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& c,
                    std::vector<std::pair<int, int>>& remaining, std::size_t col) {
  if (col == a.size()) return true;
  for (auto& [value, count] : remaining) {
    if (count == 0 || !is_triangle_column(a[col], b[col], value)) continue;
    --count;
    c[col] = value;
    if (fill_third_row(a, b, c, remaining, col + 1)) return true;
    ++count;
  }
  return false;
}

}  // namespace

BPositiveResult b_S_positive(const DistanceMultiset& s) {
  const SizeLimits limits = default_limits();
  if (s.m() > limits.b_positive_m) {
    fail(ErrorCode::kTooLarge, "exhaustive search limited to m <= " + std::to_string(limits.b_positive_m));
  }
  const auto& first = s.entries();
  std::vector<std::pair<int, int>> counts;
  for (int x : first) {
    if (counts.empty() || counts.back().first != x) counts.emplace_back(x, 0);
    ++counts.back().second;
  }
  for (const auto& second : s.arrangements()) {
    auto remaining = counts;
    std::vector<int> third(first.size());
    if (fill_third_row(first, second, third, remaining, 0)) {
      return {true, TriangleMatrix{{first, second, third}}};
    }
  }
  return {false, std::nullopt};
}

bool b_S_positive_m3(int p, int q, int r) {
  require(0 <= p && p <= q && q <= r, ErrorCode::kInvalidArgument, "need 0 <= p <= q <= r");
  const bool all_even = p % 2 == 0 && q % 2 == 0 && r % 2 == 0;
  return all_even || ((p + q + r) % 2 == 0 && r <= p + q);
}

BigInt Polygraph::a_S() const { return polylab::a_S(s_, base_->degree()); }
BigInt Polygraph::b_S() const { return polylab::b_S(s_, base_->degree()); }

Vertex Polygraph::encode(std::span<const Vertex> tuple) const {
  require(static_cast<int>(tuple.size()) == s_.m(), ErrorCode::kInvalidArgument, "tuple has wrong length");
  const Vertex n = base_->num_vertices();
  std::int64_t index = 0;
  for (Vertex x : tuple) {
    require(x >= 0 && x < n, ErrorCode::kIndexOutOfRange, "tuple coordinate out of range");
    index = index * n + x;
  }
  return static_cast<Vertex>(index);
}

std::vector<Vertex> Polygraph::decode(Vertex v) const {
  require(v >= 0 && v < graph_.num_vertices(), ErrorCode::kIndexOutOfRange, "vertex out of range");
  auto label = graph_.label(v);
  return {label.begin(), label.end()};
}

Polygraph build_polygraph(const RegularGraph& base, const DistanceMultiset& s, const PolygraphOptions& opt) {
  require(s.max() > 0, ErrorCode::kInvalidArgument, "S must contain a positive distance");
  const Vertex n = base.num_vertices();
  const Vertex d = base.degree();
  require(n > 0 && d >= 2, ErrorCode::kInvalidArgument, "base graph must have degree at least 2");

  Polygraph p;
  p.base_ = std::make_shared<const RegularGraph>(base);
  p.s_ = s;
  p.base_girth_ = girth(base);
  p.girth_safe_ = !p.base_girth_ || *p.base_girth_ > 3 * s.max();
  if (!p.girth_safe_ && !opt.allow_unsafe_girth) {
    fail(ErrorCode::kGirthTooSmall, "base girth " + std::to_string(*p.base_girth_) + " must exceed 3 * max(S) = " +
                                        std::to_string(3 * s.max()));
  }

  const int m = s.m();
  BigInt total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  if (total > opt.limits.polygraph_vertices) {
    fail(ErrorCode::kSizeLimit, "n^m = " + total.str() + " exceeds the vertex cap " +
                                    std::to_string(opt.limits.polygraph_vertices));
  }
  if (total * polylab::a_S(s, d) > opt.limits.polygraph_edge_slots) {
    fail(ErrorCode::kSizeLimit, "a_S * n^m exceeds the edge cap " + std::to_string(opt.limits.polygraph_edge_slots));
  }
  const Vertex count = total.convert_to<Vertex>();

  // spheres[r][v] = vertices at distance exactly r from v.
  const int rmax = s.max();
  std::vector<std::vector<std::vector<Vertex>>> spheres(
      static_cast<std::size_t>(rmax + 1), std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n)));
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(base, v, rmax);
    for (Vertex w = 0; w < n; ++w) {
      if (dist[w] != kUnreachable) spheres[dist[w]][v].push_back(w);
    }
  }

  const auto omega = s.arrangements();
  std::vector<std::int32_t> labels(static_cast<std::size_t>(count) * m);
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(count) + 1, 0);
  std::vector<Vertex> tuple(static_cast<std::size_t>(m));
  auto decode = [&](Vertex v) {
    Vertex rest = v;
    for (int i = m - 1; i >= 0; --i) {
      tuple[i] = rest % n;
      rest /= n;
    }
  };
  for (Vertex v = 0; v < count; ++v) {
    decode(v);
    std::copy(tuple.begin(), tuple.end(), labels.begin() + static_cast<std::ptrdiff_t>(v) * m);
    std::int64_t deg = 0;
    for (const auto& w : omega) {
      std::int64_t prod = 1;
      for (int i = 0; i < m; ++i) prod *= static_cast<std::int64_t>(spheres[w[i]][tuple[i]].size());
      deg += prod;
    }
    offsets[v + 1] = offsets[v] + deg;
  }
  require(offsets.back() <= opt.limits.polygraph_edge_slots, ErrorCode::kSizeLimit, "edge cap exceeded");

  std::vector<Vertex> targets(static_cast<std::size_t>(offsets.back()));
  std::vector<std::size_t> pos(static_cast<std::size_t>(m));
  for (Vertex v = 0; v < count; ++v) {
    decode(v);
    std::int64_t out = offsets[v];
    for (const auto& w : omega) {
      std::vector<const std::vector<Vertex>*> lists(static_cast<std::size_t>(m));
      bool empty = false;
      for (int i = 0; i < m; ++i) {
        lists[i] = &spheres[w[i]][tuple[i]];
        empty = empty || lists[i]->empty();
      }
      if (empty) continue;
      std::fill(pos.begin(), pos.end(), 0);
      for (;;) {
        std::int64_t index = 0;
        for (int i = 0; i < m; ++i) index = index * n + (*lists[i])[pos[i]];
        targets[out++] = static_cast<Vertex>(index);
        int i = m - 1;
        while (i >= 0 && ++pos[i] == lists[i]->size()) pos[i--] = 0;
        if (i < 0) break;
      }
    }
    std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);
  }

  p.graph_ = RegularGraph(SimpleGraph::from_csr(std::move(offsets), std::move(targets)));
  p.graph_.set_labels(std::move(labels), m);
  p.metric_ = std::make_shared<const GraphMetric>(p.base_);
  return p;
}

std::vector<int> distance_profile(const GraphMetric& metric, std::span<const Vertex> x, std::span<const Vertex> y) {
  require(x.size() == y.size(), ErrorCode::kInvalidArgument, "tuples have different lengths");
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = metric.distance(x[i], y[i]);
  return out;
}

std::vector<int> distance_profile(const Polygraph& p, Vertex x, Vertex y) {
  return distance_profile(p.metric(), p.graph().label(x), p.graph().label(y));
}

std::vector<Vertex> center(const GraphMetric& metric, std::span<const Vertex> x, std::span<const Vertex> y,
                           std::span<const Vertex> z) {
  require(x.size() == y.size() && y.size() == z.size(), ErrorCode::kInvalidArgument, "tuples differ in length");
  std::vector<Vertex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = metric.center(x[i], y[i], z[i]);
  return out;
}

std::vector<Vertex> center(const Polygraph& p, Vertex x, Vertex y, Vertex z) {
  require(p.girth_safe(), ErrorCode::kCenterUndefined, "base girth too small for unique centers");
  const auto& g = p.graph();
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, z}, std::pair{x, z}}) {
    for (int dist : distance_profile(p, a, b)) {
      require(dist <= p.S().max(), ErrorCode::kCenterUndefined, "coordinate distance exceeds max(S)");
    }
  }
  return center(p.metric(), g.label(x), g.label(y), g.label(z));
}

std::vector<std::vector<Vertex>> midpoints(const GraphMetric& metric, std::span<const Vertex> x,
                                           std::span<const Vertex> y) {
  require(x.size() == y.size(), ErrorCode::kInvalidArgument, "tuples have different lengths");
  const std::size_t m = x.size();
  std::vector<std::vector<Vertex>> paths(m);
  int total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    paths[i] = metric.geodesic(x[i], y[i]);
    total += static_cast<int>(paths[i].size()) - 1;
  }
  std::vector<std::vector<Vertex>> out;
  if (total % 2 != 0) return out;
  std::vector<int> k(m, 0);
  // Enumerate step counts k_i in [0, len_i] with sum total / 2, lexicographically.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == m) {
      if (left != 0) return;
      std::vector<Vertex> point(m);
      for (std::size_t j = 0; j < m; ++j) point[j] = paths[j][static_cast<std::size_t>(k[j])];
      out.push_back(std::move(point));
      return;
    }
    const int len = static_cast<int>(paths[i].size()) - 1;
    for (int step = 0; step <= std::min(len, left); ++step) {
      k[i] = step;
      rec(i + 1, left - step);
    }
  };
  rec(0, total / 2);
  return out;
}

std::vector<Vertex> midpoints(const Polygraph& p, Vertex x, Vertex y) {
  require(p.girth_safe(), ErrorCode::kCenterUndefined, "base girth too small for unique geodesics");
  std::vector<Vertex> out;
  for (const auto& t : midpoints(p.metric(), p.graph().label(x), p.graph().label(y))) out.push_back(p.encode(t));
  return out;
}

std::vector<Vertex> midpoint_123(const GraphMetric& metric, std::span<const Vertex> u, std::span<const Vertex> v) {
  const auto profile = distance_profile(metric, u, v);
  if (!DistanceMultiset({1, 2, 3}).is_arrangement(profile)) {
    fail(ErrorCode::kWrongS, "edge profile is not an ordering of (1, 2, 3)");
  }
  std::vector<Vertex> mid(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    switch (profile[i]) {
      case 1: mid[i] = u[i]; break;
      case 2: mid[i] = v[i]; break;
      default: mid[i] = metric.next_hop(u[i], v[i]); break;
    }
  }
  return mid;
}

MidpointFan midpoint_fan(const GraphMetric& metric, std::span<const Vertex> u, std::span<const Vertex> v) {
  const auto mid = midpoint_123(metric, u, v);
  const DistanceMultiset s({1, 2, 3});
  const auto& g = metric.graph();
  MidpointFan fan;
  std::vector<Vertex> x(3);
  for (Vertex a : g.neighbors(mid[0])) {
    for (Vertex b : g.neighbors(mid[1])) {
      for (Vertex c : g.neighbors(mid[2])) {
        x = {a, b, c};
        ++fan.neighbors;
        if (s.is_arrangement(distance_profile(metric, u, x)) && s.is_arrangement(distance_profile(metric, v, x))) {
          ++fan.completing;
        }
      }
    }
  }
  return fan;
}

void for_each_triangle(const Polygraph& p, const std::function<void(const TriangleRecord&)>& visit) {
  const auto& g = p.graph();
  TriangleRecord rec;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
          ++i;
        } else if (nu[i] > nv[j]) {
          ++j;
        } else {
          const Vertex w = nu[i];
          ++i;
          ++j;
          if (w <= v) continue;
          rec.vertices = {u, v, w};
          rec.profiles = {distance_profile(p, u, v), distance_profile(p, v, w), distance_profile(p, u, w)};
          rec.center.clear();
          if (p.girth_safe()) rec.center = center(p.metric(), g.label(u), g.label(v), g.label(w));
          visit(rec);
        }
      }
    }
  }
}

std::vector<TriangleRecord> enumerate_triangles(const Polygraph& p) {
  std::vector<TriangleRecord> out;
  for_each_triangle(p, [&](const TriangleRecord& r) { out.push_back(r); });
  return out;
}

std::int64_t count_triangles(const SimpleGraph& g) {
  std::int64_t count = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
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
          ++count;
          ++i;
          ++j;
        }
      }
    }
  }
  return count;
}

}  // namespace polylab
