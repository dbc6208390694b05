#include "polylab/nbw.hpp"

#include <Eigen/Dense>
#include <algorithm>

namespace polylab {

std::int64_t to_int64(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max()) || x < BigInt(std::numeric_limits<std::int64_t>::min())) {
    fail(ErrorCode::kOverflow, "integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

double IntPolynomial::evaluate(double x) const {
  long double r = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + it->convert_to<long double>();
  return static_cast<double>(r);
}

std::vector<double> IntPolynomial::roots() const {
  const int k = degree();
  if (k <= 0) return {};
  const double lead = to_double(coeffs_.back());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
  for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < k; ++i) companion(i, k - 1) = -to_double(coeffs_[i]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(solver.eigenvalues()[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntPolynomial> geronimus_family(int t_max, int d) {
  require(t_max >= 0, ErrorCode::kInvalidArgument, "walk length must be non-negative");
  require(d >= 2, ErrorCode::kInvalidArgument, "degree must be at least 2");
  std::vector<std::vector<BigInt>> p;
  p.push_back({1});
  if (t_max >= 1) p.push_back({0, 1});
  if (t_max >= 2) p.push_back({-BigInt(d), 0, 1});
  for (int t = 2; t < t_max; ++t) {
    std::vector<BigInt> next(static_cast<std::size_t>(t + 2), 0);
    for (std::size_t i = 0; i < p[t].size(); ++i) next[i + 1] += p[t][i];
    for (std::size_t i = 0; i < p[t - 1].size(); ++i) next[i] -= BigInt(d - 1) * p[t - 1][i];
    p.push_back(std::move(next));
  }
  std::vector<IntPolynomial> out;
  for (auto& c : p) out.emplace_back(std::move(c));
  return out;
}

IntPolynomial geronimus(int t, int d) { return geronimus_family(t, d).back(); }

IntMatrix IntMatrix::identity(Vertex n) {
  IntMatrix m(n);
  for (Vertex i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::adjacency(const SimpleGraph& g) {
  IntMatrix m(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) m(u, v) = 1;
  }
  return m;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "walk count exceeds 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "walk count exceeds 64 bits");
  return r;
}

// Returns A * m + c * I (+ scale * prev when given), all exact.
IntMatrix step(const SimpleGraph& g, const IntMatrix& m, std::int64_t c, const IntMatrix* prev, std::int64_t scale) {
  const Vertex n = m.size();
  IntMatrix out(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(i)) {
      for (Vertex j = 0; j < n; ++j) out(i, j) = checked_add(out(i, j), m(w, j));
    }
    out(i, i) = checked_add(out(i, i), c);
    if (prev) {
      for (Vertex j = 0; j < n; ++j) out(i, j) = checked_add(out(i, j), checked_mul(scale, (*prev)(i, j)));
    }
  }
  return out;
}

}  // namespace

IntMatrix nbw_matrix(const RegularGraph& g, int t) {
  require(t >= 0, ErrorCode::kInvalidArgument, "walk length must be non-negative");
  require(g.num_vertices() <= 5000, ErrorCode::kSizeLimit, "walk matrices limited to 5000 vertices");
  const std::int64_t d = g.degree();
  IntMatrix prev = IntMatrix::identity(g.num_vertices());
  if (t == 0) return prev;
  IntMatrix cur = IntMatrix::adjacency(g);
  if (t == 1) return cur;
  IntMatrix next = step(g, cur, -d, nullptr, 0);
  prev = std::move(cur);
  cur = std::move(next);
  for (int s = 2; s < t; ++s) {
    next = step(g, cur, 0, &prev, -(d - 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntMatrix evaluate_at_adjacency(const IntPolynomial& p, const SimpleGraph& g) {
  const Vertex n = g.num_vertices();
  IntMatrix r(n);
  const auto& c = p.coefficients();
  for (Vertex i = 0; i < n; ++i) r(i, i) = to_int64(c.back());
  for (int k = p.degree() - 1; k >= 0; --k) r = step(g, r, to_int64(c[static_cast<std::size_t>(k)]), nullptr, 0);
  return r;
}

NbwConnectivity nbw_connected_nonbipartite(const RegularGraph& g, int t) {
  const IntMatrix m = nbw_matrix(g, t);
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  bool loop = false;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (m(i, j) <= 0) continue;
      if (i == j) {
        loop = true;
      } else {
        adjacency[i].push_back(j);
      }
    }
  }
  const SimpleGraph h = SimpleGraph::from_adjacency(adjacency);
  return {is_connected(h), !loop && is_bipartite(h)};
}

}  // namespace polylab
