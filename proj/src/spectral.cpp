#include "polylab/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "polylab/nbw.hpp"

namespace polylab {

ChiEvaluator::ChiEvaluator(const DistanceMultiset& s, int d) : omega_(s.arrangements()) {
  for (const auto& p : geronimus_family(s.max(), d)) {
    std::vector<double> c;
    for (const auto& x : p.coefficients()) c.push_back(to_double(x));
    coeffs_.push_back(std::move(c));
  }
}

double ChiEvaluator::operator()(std::span<const double> lambdas) const {
  require(lambdas.size() == omega_.front().size(), ErrorCode::kInvalidArgument, "need one eigenvalue per coordinate");
  // values[t][j] = p_t(lambda_j)
  std::vector<std::vector<long double>> values(coeffs_.size(), std::vector<long double>(lambdas.size()));
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      long double r = 0.0L;
      for (auto it = coeffs_[t].rbegin(); it != coeffs_[t].rend(); ++it) r = r * lambdas[j] + *it;
      values[t][j] = r;
    }
  }
  long double total = 0.0L;
  for (const auto& w : omega_) {
    long double term = 1.0L;
    for (std::size_t j = 0; j < w.size(); ++j) term *= values[static_cast<std::size_t>(w[j])][j];
    total += term;
  }
  return static_cast<double>(total);
}

double chi(const DistanceMultiset& s, int d, std::span<const double> lambdas) {
  return ChiEvaluator(s, d)(lambdas);
}

SpectrumReport polygraph_spectrum_by_formula(const RegularGraph& base, const DistanceMultiset& s,
                                             const SizeLimits& limits) {
  const int m = s.m();
  BigInt total = 1;
  for (int i = 0; i < m; ++i) total *= base.num_vertices();
  if (total > limits.polygraph_vertices) {
    fail(ErrorCode::kSizeLimit, "n^m = " + total.str() + " exceeds the vertex cap");
  }
  const auto base_groups = group_eigenvalues(adjacency_eigenvalues(base, static_cast<Vertex>(limits.dense_spectrum)));
  const ChiEvaluator eval(s, base.degree());
  const std::size_t k = base_groups.size();
  std::vector<std::pair<double, std::int64_t>> values;
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  std::vector<double> lambdas(static_cast<std::size_t>(m));
  for (;;) {
    std::int64_t mult = 1;
    for (int j = 0; j < m; ++j) {
      lambdas[j] = base_groups[pick[j]].value;
      mult *= base_groups[pick[j]].mult;
    }
    values.emplace_back(eval(lambdas), mult);
    int j = m - 1;
    while (j >= 0 && ++pick[j] == k) pick[j--] = 0;
    if (j < 0) break;
  }
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<EigenGroup> groups;
  for (const auto& [v, mult] : values) {
    if (!groups.empty() && groups.back().value - v <= 1e-8) {
      auto& gr = groups.back();
      gr.value = (gr.value * gr.mult + v * mult) / static_cast<double>(gr.mult + mult);
      gr.mult += mult;
    } else {
      groups.push_back({v, mult});
    }
  }
  for (auto& gr : groups) {
    const double r = std::round(gr.value);
    if (std::abs(gr.value - r) <= 1e-8) gr.value = r;
    if (gr.value == 0.0) gr.value = 0.0;
  }
  const BigInt degree = a_S(s, base.degree());
  require(degree <= std::numeric_limits<Vertex>::max(), ErrorCode::kOverflow, "polygraph degree too large");
  return report_from_groups(std::move(groups), degree.convert_to<Vertex>());
}

namespace {

double mu_of(int d, double lambda_base) { return std::max(lambda_base, 2.0 * std::sqrt(d - 1.0)); }

}  // namespace

double lambda_bound(const DistanceMultiset& s, int d, double lambda_base) {
  require(d >= 2, ErrorCode::kInvalidArgument, "degree must be at least 2");
  const double mu = mu_of(d, lambda_base);
  const int k = s.distinct();
  const int smin = s.min();
  const int n = s.sum();
  return to_double(s.arrangement_count()) * std::pow(mu, smin) * std::pow(d, k - 1) *
         std::pow(d - 1.0, n - k - smin + 1);
}

double lambda_bound_111(int d, double lambda_base) { return mu_of(d, lambda_base) * d * d; }

double lambda_bound_123(int d, double lambda_base) {
  return 6.0 * mu_of(d, lambda_base) * d * d * std::pow(d - 1.0, 3);
}

EmlResult eml_bound(double degree, double n, double lambda, double size_a, double size_b) {
  require(n > 0 && size_a >= 0 && size_b >= 0 && size_a <= n && size_b <= n, ErrorCode::kInvalidArgument,
          "set sizes must lie in [0, n]");
  const double mean = degree * size_a * size_b / n;
  const double spread = lambda * std::sqrt(std::max(0.0, size_a * size_b * (1 - size_a / n) * (1 - size_b / n)));
  return {mean - spread, mean + spread, std::numeric_limits<double>::quiet_NaN()};
}

EmlResult eml_bound(const RegularGraph& g, double lambda, std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<char> in_b(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : b) in_b.at(static_cast<std::size_t>(v)) = 1;
  double count = 0;
  for (Vertex u : a) {
    for (Vertex w : g.neighbors(u)) count += in_b[w];
  }
  auto r = eml_bound(g.degree(), g.num_vertices(), lambda, static_cast<double>(a.size()), static_cast<double>(b.size()));
  r.observed = count;
  return r;
}

EmlResult eml_bound_multiset(double degree, double n, double lambda, double mass_p, double square_p, double mass_q,
                             double square_q) {
  require(n > 0, ErrorCode::kInvalidArgument, "n must be positive");
  const double mean = degree * mass_p * mass_q / n;
  const double vp = std::max(0.0, square_p - mass_p * mass_p / n);
  const double vq = std::max(0.0, square_q - mass_q * mass_q / n);
  const double spread = lambda * std::sqrt(vp * vq);
  return {mean - spread, mean + spread, std::numeric_limits<double>::quiet_NaN()};
}

EmlResult eml_bound_multiset(const RegularGraph& g, double lambda, std::span<const double> wp,
                             std::span<const double> wq) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  require(wp.size() == n && wq.size() == n, ErrorCode::kInvalidArgument, "weights must cover every vertex");
  double mp = 0, sp = 0, mq = 0, sq = 0, observed = 0;
  for (std::size_t x = 0; x < n; ++x) {
    mp += wp[x];
    sp += wp[x] * wp[x];
    mq += wq[x];
    sq += wq[x] * wq[x];
    for (Vertex y : g.neighbors(static_cast<Vertex>(x))) observed += wp[x] * wq[y];
  }
  auto r = eml_bound_multiset(g.degree(), static_cast<double>(n), lambda, mp, sp, mq, sq);
  r.observed = observed;
  return r;
}

DesaiRaoResult desai_rao_check(const RegularGraph& g) {
  const Vertex n = g.num_vertices();
  const int cap = default_limits().desai_rao_vertices;
  require(n <= cap, ErrorCode::kTooLarge, "exhaustive check limited to " + std::to_string(cap) + " vertices");
  require(n >= 1, ErrorCode::kInvalidArgument, "graph is empty");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  const std::uint32_t full = (1u << n) - 1;
  // inside[X] = number of edges with both ends in X.
  std::vector<int> inside(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t x = 1; x <= full; ++x) {
    const int v = std::countr_zero(x);
    const std::uint32_t rest = x & (x - 1);
    inside[x] = inside[rest] + std::popcount(adj[v] & rest);
  }
  double psi = std::numeric_limits<double>::infinity();
  for (std::uint32_t u = 1; u <= full; ++u) {
    int boundary = 0;
    for (std::uint32_t rest = u; rest; rest &= rest - 1) boundary += std::popcount(adj[std::countr_zero(rest)] & ~u & full);
    // Fix the lowest vertex on the red side; enumerate the rest of the red side.
    const std::uint32_t low = u & (~u + 1);
    const std::uint32_t others = u ^ low;
    int best = inside[u];
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t red = sub | low;
      best = std::min(best, inside[red] + inside[u ^ red]);
      if (sub == 0) break;
    }
    psi = std::min(psi, static_cast<double>(best + boundary) / std::popcount(u));
  }
  DesaiRaoResult r;
  r.psi = psi;
  const double d = g.degree();
  r.bound = -d + psi * psi / (4 * d);
  r.lambda_min = adjacency_eigenvalues(g).front();
  r.holds = r.lambda_min >= r.bound - 1e-9;
  return r;
}

}  // namespace polylab
