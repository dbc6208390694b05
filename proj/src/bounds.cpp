#include "polylab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace polylab {

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;

void check_pair(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b + 1) {
    fail(ErrorCode::kInvalidPair, "need a >= b + 1 >= 1, got a = " + std::to_string(a) + ", b = " + std::to_string(b));
  }
}

void check_nondegenerate(std::int64_t a, std::int64_t b) {
  check_pair(a, b);
  if (b <= 1 || a - b <= 2) {
    fail(ErrorCode::kDegenerate, "tradeoff undefined for b <= 1 or a - b <= 2 (a = " + std::to_string(a) +
                                     ", b = " + std::to_string(b) + ")");
  }
}

// x log2 y with 0 log 0 = 0.
double xlog2(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return -std::numeric_limits<double>::infinity();
  return x * std::log2(y);
}

double entropy3(double p, double q, double r) { return -(xlog2(p, p) + xlog2(q, q) + xlog2(r, r)); }

// Maximizer of a smooth function on [lo, hi]: grid scan, golden section, then bisection on the
// derivative sign inside the final bracket.
Maximum maximize(const std::function<double(double)>& f, const std::function<double(double)>& df, double lo,
                 double hi) {
  constexpr int kGrid = 10'000;
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double x = lo + (hi - lo) * i / kGrid;
    const double v = f(x);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / kGrid;
  double b = lo + (hi - lo) * std::min(kGrid, best + 1) / kGrid;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  // Derivative refinement when the bracket straddles a sign change.
  double left = lo + (hi - lo) * std::max(0, best - 1) / kGrid;
  double right = lo + (hi - lo) * std::min(kGrid, best + 1) / kGrid;
  double dl = df(left), dr = df(right);
  if (std::isfinite(dl) && std::isfinite(dr) && dl > 0 && dr < 0) {
    for (int it = 0; it < 200 && right - left > 1e-16; ++it) {
      const double mid = 0.5 * (left + right);
      if (df(mid) > 0) {
        left = mid;
      } else {
        right = mid;
      }
    }
    // f is flat to rounding near the peak, so the derivative root locates it better than f does
    x = 0.5 * (left + right);
  }
  return {x, f(x)};
}

}  // namespace

double abtb_value(std::int64_t a, std::int64_t b) {
  check_pair(a, b);
  return static_cast<double>(b) + 2.0 * std::sqrt(static_cast<double>(a - b - 1));
}

BigInt catalan_walk_census(std::int64_t a, std::int64_t b, int t) {
  check_pair(a, b);
  require(t >= 0, ErrorCode::kInvalidArgument, "walk length must be non-negative");
  BigInt total = 0;
  for (int k = 0; 2 * k < t; ++k) {
    BigInt term = factorial(t) / (factorial(k) * factorial(k) * factorial(t - 2 * k));
    require(term % (k + 1) == 0, ErrorCode::kDomainError, "census term is not integral");
    term /= (k + 1);
    term *= power(BigInt(b), static_cast<unsigned>(t - 2 * k));
    term *= power(BigInt(a - b - 1), static_cast<unsigned>(k));
    total += term;
  }
  return total;
}

std::vector<BigInt> closed_walk_traces(const SimpleGraph& g, int t_max) {
  require(t_max >= 0, ErrorCode::kInvalidArgument, "walk length must be non-negative");
  const Vertex n = g.num_vertices();
  std::vector<BigInt> traces(static_cast<std::size_t>(t_max) + 1, 0);
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[s] = 1;
    traces[0] += 1;
    for (int t = 1; t <= t_max; ++t) {
      for (Vertex u = 0; u < n; ++u) {
        std::int64_t sum = 0;
        for (Vertex w : g.neighbors(u)) {
          if (__builtin_add_overflow(sum, cur[w], &sum)) fail(ErrorCode::kOverflow, "walk count exceeds 64 bits");
        }
        next[u] = sum;
      }
      std::swap(cur, next);
      traces[static_cast<std::size_t>(t)] += cur[s];
    }
  }
  return traces;
}

double entropy_objective(double alpha, std::int64_t a, std::int64_t b) {
  check_pair(a, b);
  require(alpha >= 0.0 && alpha <= 0.5, ErrorCode::kDomainError, "alpha must lie in [0, 1/2]");
  const double k = static_cast<double>(a - b - 1);
  return entropy3(alpha, alpha, 1 - 2 * alpha) + xlog2(alpha, k) + xlog2(1 - 2 * alpha, static_cast<double>(b));
}

Maximum entropy_closed_form(std::int64_t a, std::int64_t b) {
  check_pair(a, b);
  const double c = std::sqrt(static_cast<double>(a - b - 1));
  if (b == 0) return {0.5, std::log2(2 * c)};
  return {c / (b + 2 * c), std::log2(b + 2 * c)};
}

Maximum entropy_argmax(std::int64_t a, std::int64_t b) {
  check_pair(a, b);
  const std::int64_t k = a - b - 1;
  if (b == 0) return {0.5, entropy_objective(0.5, a, b)};  // limit point: only alpha = 1/2 is finite
  if (k == 0) return {0.0, entropy_objective(0.0, a, b)};
  auto f = [&](double x) { return entropy_objective(x, a, b); };
  auto df = [&](double x) {
    if (x <= 0) return std::numeric_limits<double>::infinity();
    if (x >= 0.5) return -std::numeric_limits<double>::infinity();
    return (2 * std::log((1 - 2 * x) / x) + std::log(static_cast<double>(k)) - 2 * std::log(static_cast<double>(b))) /
           kLn2;
  };
  return maximize(f, df, 0.0, 0.5);
}

double tradeoff_objective(double beta, std::int64_t a, std::int64_t b, double r) {
  check_nondegenerate(a, b);
  const double k = static_cast<double>(a - b - 1);
  const double bd = static_cast<double>(b);
  require(r >= 0 && r < bd * k, ErrorCode::kDomainError, "need 0 <= r < b (a - b - 1)");
  require(beta >= 0.0 && beta <= 0.5, ErrorCode::kDomainError, "beta must lie in [0, 1/2]");
  return entropy_objective(beta, a, b) + beta * beta * std::log2(1 + r / k) +
         beta * (1 - 2 * beta) * std::log2(1 - r / (bd * k));
}

Maximum tradeoff_argmax(std::int64_t a, std::int64_t b, double r) {
  check_nondegenerate(a, b);
  const double k = static_cast<double>(a - b - 1);
  const double bd = static_cast<double>(b);
  const double l1 = std::log(1 + r / k);
  const double l2 = std::log(1 - r / (bd * k));
  auto f = [&](double x) { return tradeoff_objective(x, a, b, r); };
  auto df = [&](double x) {
    if (x <= 0) return std::numeric_limits<double>::infinity();
    if (x >= 0.5) return -std::numeric_limits<double>::infinity();
    return (2 * std::log((1 - 2 * x) / x) + std::log(k) - 2 * std::log(bd) + 2 * x * l1 + (1 - 4 * x) * l2) / kLn2;
  };
  return maximize(f, df, 0.0, 0.5);
}

TradeoffTable tradeoff_table() {
  TradeoffTable table{};
  for (int row = 0; row < 7; ++row) {
    for (int col = 0; col < 7; ++col) {
      const std::int64_t k = kTableFirst + row;
      const std::int64_t b = kTableFirst + col;
      const std::int64_t a = b + k + 1;
      const double c = std::sqrt(static_cast<double>(k));
      const double base = b + 2 * c;
      const double best = tradeoff_argmax(a, b, 1.0).value;
      table[row][col] = base * base * kLn2 * (best - std::log2(base));
    }
  }
  return table;
}

double delta_threshold(std::int64_t a, std::int64_t b) {
  require(b >= 1 && a > b + 1, ErrorCode::kInvalidPair, "need a > b + 1 and b >= 1");
  const double k = static_cast<double>(a - b - 1);
  const double c = std::sqrt(k);
  return b * k * (c - 1) / ((b + c) * static_cast<double>(std::min(b + 1, a - b - 1)));
}

std::int64_t optimal_r(std::int64_t a, std::int64_t b, double delta) {
  check_pair(a, b);
  require(delta >= 0, ErrorCode::kDomainError, "delta must be non-negative");
  const double k = static_cast<double>(a - b - 1);
  const double c = std::sqrt(k);
  const double guaranteed = static_cast<double>(std::min(b + 1, a - b - 1)) * delta;
  const auto r_floor = static_cast<std::int64_t>(std::ceil(guaranteed - 1e-9));
  const double best = b + c > 0 ? b * (c * c * c - c * c) / (b + c) : 0.0;
  const auto r_best = static_cast<std::int64_t>(std::ceil(best - 1e-9));
  return std::max<std::int64_t>(0, std::min(r_floor, r_best));
}

TradeoffEpsilon tradeoff_epsilon(std::int64_t a, std::int64_t b, double delta) {
  check_nondegenerate(a, b);
  TradeoffEpsilon out;
  out.r = optimal_r(a, b, delta);
  const auto best = tradeoff_argmax(a, b, static_cast<double>(out.r));
  out.beta = best.argmax;
  const double c = std::sqrt(static_cast<double>(a - b - 1));
  out.epsilon = std::exp2(best.value - std::log2(b + 2 * c)) - 1.0;
  return out;
}

LocalCoordinates local_coordinates(const SimpleGraph& g, Vertex x, Vertex z) {
  require(x >= 0 && z >= 0 && x < g.num_vertices() && z < g.num_vertices(), ErrorCode::kIndexOutOfRange,
          "vertex out of range");
  require(g.has_edge(x, z), ErrorCode::kInvalidArgument, "x and z must be adjacent");
  LocalCoordinates out;
  for (Vertex w : g.neighbors(x)) {
    if (w == z) continue;
    (g.has_edge(z, w) ? out.psi : out.phi).push_back(w);
  }
  for (Vertex u : out.phi) {
    for (Vertex y : out.psi) out.cross_edges += g.has_edge(u, y);
  }
  return out;
}

RegularityPair ab_regularity(const SimpleGraph& g) {
  const auto a = g.common_degree();
  if (!a) fail(ErrorCode::kNotABRegular, "graph is not regular");
  const auto b = common_neighbor_count(g);
  if (!b) fail(ErrorCode::kNotABRegular, "links are not regular");
  return {*a, *b};
}

std::int64_t cross_edge_min(const SimpleGraph& g) {
  ab_regularity(g);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex z : g.neighbors(x)) best = std::min(best, local_coordinates(g, x, z).cross_edges);
  }
  return best == std::numeric_limits<std::int64_t>::max() ? 0 : best;
}

}  // namespace polylab
