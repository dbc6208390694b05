#include "polylab/link.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace polylab {

TreeBall::TreeBall(int d, int radius) : d_(d), radius_(radius) {
  require(d >= 2, ErrorCode::kInvalidArgument, "tree degree must be at least 2");
  require(radius >= 0, ErrorCode::kInvalidArgument, "radius must be non-negative");
  BigInt total = 1;
  for (int r = 1; r <= radius; ++r) total += sphere_size(d, r);
  require(total <= 20'000'000, ErrorCode::kSizeLimit, "tree ball has " + total.str() + " vertices");
  const auto n = total.convert_to<std::size_t>();
  parent_.reserve(n);
  depth_.reserve(n);
  parent_.push_back(-1);
  depth_.push_back(0);
  level_start_.push_back(0);
  for (int r = 0; r < radius; ++r) {
    const Vertex begin = level_start_.back();
    const Vertex end = static_cast<Vertex>(parent_.size());
    level_start_.push_back(end);
    for (Vertex v = begin; v < end; ++v) {
      first_child_.push_back(static_cast<Vertex>(parent_.size()));
      for (int k = 0; k < child_count(v); ++k) {
        parent_.push_back(v);
        depth_.push_back(r + 1);
      }
    }
  }
  level_start_.push_back(static_cast<Vertex>(parent_.size()));
  first_child_.resize(parent_.size(), static_cast<Vertex>(parent_.size()));
}

int TreeBall::distance(Vertex u, Vertex v) const {
  int steps = 0;
  while (depth_[u] > depth_[v]) u = parent_[u], ++steps;
  while (depth_[v] > depth_[u]) v = parent_[v], ++steps;
  while (u != v) u = parent_[u], v = parent_[v], steps += 2;
  return steps;
}

SimpleGraph TreeBall::graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < size(); ++v) edges.emplace_back(parent_[v], v);
  return SimpleGraph::from_edges(size(), edges);
}

LocalGapBounds local_gap_bounds(int p, int q, int d) {
  require(p >= 0 && p % 2 == 0 && q % 2 == 0 && p < q, ErrorCode::kInvalidArgument, "need even p < q");
  require(d >= 3, ErrorCode::kInvalidArgument, "need d >= 3");
  LocalGapBounds r;
  r.p = p;
  r.q = q;
  r.d = d;
  r.b_S = b_S(DistanceMultiset({p, q, p + q}), d);
  const double x = 1.0 / (20.0 * to_double(r.b_S));
  r.beta1 = 1.0 - std::sqrt(1.0 - x * x);
  // (d-2)^e / (6^20 d^e) with e = 12p + 12q + 6, evaluated in logs.
  const double e = 12.0 * p + 12.0 * q + 6.0;
  const double log_ratio = e * (std::log(d - 2.0) - std::log(static_cast<double>(d))) - 20.0 * std::log(6.0);
  const double ratio = std::exp(log_ratio);
  r.beta2 = -std::expm1(std::log1p(-ratio) / 10.0);
  r.log_beta2 = ratio < 1e-8 ? log_ratio - std::log(10.0) : std::log(r.beta2);
  r.gamma = std::max(r.beta1, r.beta2);
  r.log_path_count = (10.0 * p + 10.0 * q + 6.0) * std::log(d - 2.0) - std::log(6.0) -
                     (2.0 * p + 2.0 * q + 6.0) * std::log(static_cast<double>(d));
  return r;
}

namespace {

class LinkBuilder {
 public:
  LinkBuilder(const DistanceMultiset& s, int d)
      : s_(s), m_(s.m()), rmax_(s.max()), tree_(d, 2 * s.max()), omega_(s.arrangements()) {
    BigInt total = 0;
    for (std::size_t k = 0; k < omega_.size(); ++k) {
      block_start_.push_back(total);
      pattern_index_[omega_[k]] = static_cast<int>(k);
      BigInt block = 1;
      for (int depth : omega_[k]) block *= tree_.level_end(depth) - tree_.level_begin(depth);
      total += block;
    }
    total_ = total;
    buckets_.resize(static_cast<std::size_t>(tree_.level_end(rmax_)));
  }

  const BigInt& total() const { return total_; }
  const TreeBall& tree() const { return tree_; }
  std::size_t patterns() const { return omega_.size(); }
  Vertex block_start(std::size_t k) const { return block_start_[k].convert_to<Vertex>(); }

  // Tree ids of link vertex with index `index`.
  std::vector<Vertex> tuple(Vertex index) const {
    std::size_t k = omega_.size() - 1;
    while (block_start_[k] > index) --k;
    Vertex rest = index - block_start(k);
    std::vector<Vertex> out(static_cast<std::size_t>(m_));
    for (int i = m_ - 1; i >= 0; --i) {
      const int depth = omega_[k][i];
      const Vertex width = tree_.level_end(depth) - tree_.level_begin(depth);
      out[i] = tree_.level_begin(depth) + rest % width;
      rest /= width;
    }
    return out;
  }

  Vertex index_of(const std::vector<Vertex>& t) const {
    std::vector<int> pattern(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) pattern[i] = tree_.depth(t[i]);
    const int k = pattern_index_.at(pattern);
    std::int64_t index = 0;
    for (int i = 0; i < m_; ++i) {
      const Vertex width = tree_.level_end(pattern[i]) - tree_.level_begin(pattern[i]);
      index = index * width + (t[i] - tree_.level_begin(pattern[i]));
    }
    return block_start(static_cast<std::size_t>(k)) + static_cast<Vertex>(index);
  }

  // Vertices at distance `dist` from y whose depth is `depth`.
  const std::vector<Vertex>& bucket(Vertex y, int dist, int depth) {
    auto& b = buckets_[y];
    if (b.empty()) fill(y, b);
    return b[static_cast<std::size_t>(dist * (rmax_ + 1) + depth)];
  }

  template <typename Visit>
  void for_each_neighbor(const std::vector<Vertex>& y, Visit visit) {
    std::vector<const std::vector<Vertex>*> lists(static_cast<std::size_t>(m_));
    std::vector<std::size_t> pos(static_cast<std::size_t>(m_));
    std::vector<Vertex> z(static_cast<std::size_t>(m_));
    for (const auto& dist : omega_) {
      for (const auto& depth : omega_) {
        bool empty = false;
        for (int i = 0; i < m_ && !empty; ++i) {
          lists[i] = &bucket(y[i], dist[i], depth[i]);
          empty = lists[i]->empty();
        }
        if (empty) continue;
        std::fill(pos.begin(), pos.end(), 0);
        for (;;) {
          for (int i = 0; i < m_; ++i) z[i] = (*lists[i])[pos[i]];
          visit(z);
          int i = m_ - 1;
          while (i >= 0 && ++pos[i] == lists[i]->size()) pos[i--] = 0;
          if (i < 0) break;
        }
      }
    }
  }

  std::int64_t count_neighbors(const std::vector<Vertex>& y) {
    std::int64_t total = 0;
    for (const auto& dist : omega_) {
      for (const auto& depth : omega_) {
        std::int64_t prod = 1;
        for (int i = 0; i < m_; ++i) prod *= static_cast<std::int64_t>(bucket(y[i], dist[i], depth[i]).size());
        total += prod;
      }
    }
    return total;
  }

 private:
  void fill(Vertex y, std::vector<std::vector<Vertex>>& b) {
    b.assign(static_cast<std::size_t>((rmax_ + 1) * (rmax_ + 1)), {});
    // Walk outward from y inside the ball; y has depth <= rmax so radius 2 rmax suffices.
    std::vector<std::pair<Vertex, Vertex>> frontier{{y, -1}};
    for (int dist = 0; dist <= rmax_ && !frontier.empty(); ++dist) {
      std::vector<std::pair<Vertex, Vertex>> next;
      for (auto [v, from] : frontier) {
        if (tree_.depth(v) <= rmax_) b[static_cast<std::size_t>(dist * (rmax_ + 1) + tree_.depth(v))].push_back(v);
        if (dist == rmax_) continue;
        if (v != 0 && tree_.parent(v) != from) next.emplace_back(tree_.parent(v), v);
        if (tree_.depth(v) < tree_.radius()) {
          for (int k = 0; k < tree_.child_count(v); ++k) {
            const Vertex c = tree_.child(v, k);
            if (c != from) next.emplace_back(c, v);
          }
        }
      }
      frontier = std::move(next);
    }
    for (auto& list : b) std::sort(list.begin(), list.end());
  }

  DistanceMultiset s_;
  int m_;
  int rmax_;
  TreeBall tree_;
  std::vector<std::vector<int>> omega_;
  std::map<std::vector<int>, int> pattern_index_;
  std::vector<BigInt> block_start_;
  BigInt total_;
  std::vector<std::vector<std::vector<Vertex>>> buckets_;
};

}  // namespace

LinkReport build_link_via_tree(const DistanceMultiset& s, int d, const LinkOptions& options) {
  require(s.max() > 0, ErrorCode::kInvalidArgument, "S must contain a positive distance");
  require(d >= 2, ErrorCode::kInvalidArgument, "degree must be at least 2");
  LinkReport report;
  report.S = s;
  report.d = d;
  report.a_S = a_S(s, d);
  report.b_S = b_S(s, d);
  if (report.a_S > options.max_vertices) {
    fail(ErrorCode::kSizeLimit, "link has " + report.a_S.str() + " vertices, cap is " +
                                    std::to_string(options.max_vertices));
  }
  LinkBuilder builder(s, d);
  require(builder.total() == report.a_S, ErrorCode::kInvalidArgument, "tree levels disagree with sphere sizes");
  const Vertex n = builder.total().convert_to<Vertex>();
  const int m = s.m();

  std::vector<std::int64_t> offsets{0};
  std::vector<Vertex> targets;
  std::vector<std::int32_t> labels;
  labels.reserve(static_cast<std::size_t>(n) * m);
  for (Vertex v = 0; v < n; ++v) {
    const auto y = builder.tuple(v);
    labels.insert(labels.end(), y.begin(), y.end());
    const std::size_t start = targets.size();
    builder.for_each_neighbor(y, [&](const std::vector<Vertex>& z) { targets.push_back(builder.index_of(z)); });
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(start), targets.end());
    offsets.push_back(static_cast<std::int64_t>(targets.size()));
  }
  report.graph = RegularGraph(SimpleGraph::from_csr(std::move(offsets), std::move(targets)));
  report.graph.set_labels(std::move(labels), m);

  connected_components(report.graph, &report.components);
  report.connected = report.components <= 1;
  if (options.compute_diameter && report.connected) {
    // One vertex per depth ordering represents every orbit of the root-fixing tree automorphisms.
    int diam = 0;
    for (std::size_t k = 0; k < builder.patterns(); ++k) {
      diam = std::max(diam, eccentricity(report.graph, builder.block_start(k)));
    }
    report.diameter = diam;
  }
  if (options.compute_spectrum) {
    if (n <= options.dense_limit) {
      report.spectrum = spectrum(report.graph);
    } else {
      report.spectrum = iterative_spectrum(report.graph);
    }
  }
  if (m == 3) {
    const auto& e = s.entries();
    if (e[0] % 2 == 0 && e[1] % 2 == 0 && e[0] < e[1] && e[2] == e[0] + e[1] && d >= 3) {
      report.gap_bounds = local_gap_bounds(e[0], e[1], d);
    }
  }
  return report;
}

std::vector<std::int64_t> link_representative_degrees(const DistanceMultiset& s, int d) {
  require(s.max() > 0, ErrorCode::kInvalidArgument, "S must contain a positive distance");
  LinkBuilder builder(s, d);
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < builder.patterns(); ++k) {
    out.push_back(builder.count_neighbors(builder.tuple(builder.block_start(k))));
  }
  return out;
}

RegularGraph link_of_vertex(const Polygraph& p, Vertex x) {
  const auto& g = p.graph();
  require(x >= 0 && x < g.num_vertices(), ErrorCode::kIndexOutOfRange, "vertex out of range");
  auto nb = g.neighbors(x);
  std::vector<Vertex> vertices(nb.begin(), nb.end());
  RegularGraph link(induced_subgraph(g, vertices));
  std::vector<std::int32_t> labels;
  for (Vertex v : vertices) {
    auto l = g.label(v);
    labels.insert(labels.end(), l.begin(), l.end());
  }
  link.set_labels(std::move(labels), g.label_width());
  return link;
}

bool link_connected_m2(int p, int q) {
  require(0 <= p && p <= q && q > 0, ErrorCode::kInvalidArgument, "need 0 <= p <= q, q > 0");
  return p % 2 == 0 && q == 2 * p;
}

bool link_connected_m3(int p, int q, int r) {
  require(0 <= p && p <= q && q <= r && r > 0, ErrorCode::kInvalidArgument, "need 0 <= p <= q <= r, r > 0");
  if ((p + q + r) % 2 != 0) return false;
  const bool first = r == p + q && (p % 2 == 0 || (q % 2 == 0 && 2 * p >= q) || p == q);
  const bool second = (q == 2 * p && r <= p + q) || r == 2 * p;
  const bool all_even = p % 2 == 0 && q % 2 == 0 && r % 2 == 0;
  const bool third = all_even && 4 * p >= 2 * q && 2 * q >= r && (r == 2 * p || r == 2 * q || q == 2 * p);
  return first || second || third;
}

double aldous_expansion_bound(int diameter) {
  require(diameter != kUnreachable, ErrorCode::kDisconnected, "graph is disconnected");
  require(diameter > 0, ErrorCode::kInvalidArgument, "diameter must be positive");
  return 1.0 / (2.0 * diameter);
}

double aldous_expansion_bound(const SimpleGraph& link) { return aldous_expansion_bound(diameter(link)); }

std::vector<EigenCertificate> link_110_certificates(const LinkReport& link) {
  require(link.S == DistanceMultiset({0, 1, 1}), ErrorCode::kWrongS, "certificates exist for S = [1, 1, 0] only");
  const auto& g = link.graph;
  const int d = link.d;
  const Vertex n = g.num_vertices();
  // Tree ids: root 0 is v_0, its children 1..d are v_1..v_d.
  std::map<std::array<Vertex, 3>, Vertex> index;
  for (Vertex x = 0; x < n; ++x) {
    auto l = g.label(x);
    index[{l[0], l[1], l[2]}] = x;
  }
  auto at = [&](std::array<Vertex, 3> t, int shift) {
    std::array<Vertex, 3> r{};
    for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>((k + shift) % 3)] = t[static_cast<std::size_t>(k)];
    return index.at(r);
  };
  auto zero = [&] { return std::vector<std::int64_t>(static_cast<std::size_t>(n), 0); };

  std::vector<EigenCertificate> out;
  out.push_back({2LL * d, {std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)}});

  EigenCertificate plus{d, {}};
  for (int alpha = 0; alpha < 3; ++alpha) {
    for (int beta = 2; beta <= d; ++beta) {
      auto v = zero();
      for (Vertex x = 0; x < n; ++x) {
        const Vertex c = g.label(x)[static_cast<std::size_t>(alpha)];
        if (c == 1) v[x] += 1;
        if (c == beta) v[x] -= 1;
      }
      plus.vectors.push_back(std::move(v));
    }
  }
  out.push_back(std::move(plus));

  EigenCertificate kernel{0, {}};
  for (int shift = 0; shift < 3; ++shift) {
    for (Vertex i = 2; i <= d; ++i) {
      for (Vertex j = 2; j <= d; ++j) {
        auto v = zero();
        v[at({1, 1, 0}, shift)] += 1;
        v[at({i, j, 0}, shift)] += 1;
        v[at({1, j, 0}, shift)] -= 1;
        v[at({i, 1, 0}, shift)] -= 1;
        kernel.vectors.push_back(std::move(v));
      }
    }
  }
  out.push_back(std::move(kernel));

  EigenCertificate minus{-d, {}};
  for (int shift = 0; shift < 3; ++shift) {
    for (Vertex i = 1; i <= d; ++i) {
      auto v = zero();
      for (Vertex j = 1; j <= d; ++j) {
        v[at({i, 0, j}, shift)] += 1;
        v[at({i, j, 0}, shift)] -= 1;
      }
      minus.vectors.push_back(std::move(v));
    }
  }
  minus.vectors.pop_back();  // the 3d vectors sum to zero
  out.push_back(std::move(minus));
  return out;
}

CertificateCheck verify_certificates(const SimpleGraph& g, const std::vector<EigenCertificate>& certs) {
  const Vertex n = g.num_vertices();
  CertificateCheck check;
  check.all_eigenvectors = true;
  constexpr std::int64_t kPrime = 1'000'000'007;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& cert : certs) {
    for (const auto& v : cert.vectors) {
      require(static_cast<Vertex>(v.size()) == n, ErrorCode::kInvalidArgument, "vector has wrong length");
      for (Vertex x = 0; x < n && check.all_eigenvectors; ++x) {
        std::int64_t s = 0;
        for (Vertex w : g.neighbors(x)) s += v[w];
        if (s != cert.eigenvalue * v[x]) check.all_eigenvectors = false;
      }
      std::vector<std::int64_t> row(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) row[i] = ((v[i] % kPrime) + kPrime) % kPrime;
      rows.push_back(std::move(row));
      ++check.total;
    }
  }
  // Rank modulo a prime bounds the rational rank from below.
  auto inverse = [&](std::int64_t a) {
    std::int64_t r = 1, e = kPrime - 2;
    while (e) {
      if (e & 1) r = r * a % kPrime;
      a = a * a % kPrime;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (Vertex col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t inv = inverse(rows[rank][col]);
    for (auto& x : rows[rank]) x = x * inv % kPrime;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col];
      for (Vertex c = col; c < n; ++c) rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  check.rank = static_cast<std::int64_t>(rank);
  return check;
}

}  // namespace polylab
