#include "polylab/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace polylab {

std::vector<double> adjacency_eigenvalues(const SimpleGraph& g, Vertex dense_limit) {
  const Vertex n = g.num_vertices();
  if (n > dense_limit) {
    fail(ErrorCode::kTooLarge, "dense eigensolver limited to " + std::to_string(dense_limit) + " vertices, got " +
                                   std::to_string(n));
  }
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorCode::kDomainError, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<EigenGroup> group_eigenvalues(std::vector<double> values, double tolerance) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<EigenGroup> groups;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= tolerance) sum += values[j++];
    groups.push_back({sum / static_cast<double>(j - i), static_cast<std::int64_t>(j - i)});
    i = j;
  }
  for (auto& gr : groups) {
    const double r = std::round(gr.value);
    if (std::abs(gr.value - r) <= tolerance) gr.value = r;
    if (gr.value == 0.0) gr.value = 0.0;  // normalise -0
  }
  return groups;
}

SpectrumReport report_from_groups(std::vector<EigenGroup> groups, Vertex d) {
  SpectrumReport r;
  r.d = d;
  r.eigenvalues = std::move(groups);
  std::int64_t n = 0;
  for (const auto& gr : r.eigenvalues) n += gr.mult;
  r.n = static_cast<Vertex>(n);
  if (r.eigenvalues.empty()) return r;
  r.lambda2 = r.eigenvalues.front().mult > 1 || r.eigenvalues.size() == 1 ? r.eigenvalues.front().value
                                                                          : r.eigenvalues[1].value;
  r.lambda_min = r.eigenvalues.back().value;
  if (n == 1) r.lambda2 = r.lambda_min;
  r.lambda_abs = std::max(r.lambda2, -r.lambda_min);
  r.normalized_gap = d > 0 ? 1.0 - r.lambda2 / d : 0.0;
  return r;
}

SpectrumReport spectrum(const RegularGraph& g, const SpectrumOptions& options) {
  if (g.num_vertices() > options.dense_limit && options.allow_iterative) return iterative_spectrum(g);
  auto values = adjacency_eigenvalues(g, options.dense_limit);
  return report_from_groups(group_eigenvalues(std::move(values), options.group_tolerance), g.degree());
}

namespace {

void apply(const SimpleGraph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    double s = 0.0;
    for (Vertex w : g.neighbors(u)) s += x[w];
    y[u] = s;
  }
}

}  // namespace

LanczosResult lanczos_extremes(const SimpleGraph& g, bool deflate_constant, const LanczosOptions& options) {
  const Vertex n = g.num_vertices();
  LanczosResult result;
  const int dim = n - (deflate_constant ? 1 : 0);
  require(dim >= 1, ErrorCode::kInvalidArgument, "operator has empty domain");

  Eigen::VectorXd ones;
  if (deflate_constant) ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  auto project = [&](Eigen::VectorXd& v) {
    if (deflate_constant) v -= ones.dot(v) * ones;
  };

  std::mt19937_64 rng(options.seed);
  Eigen::VectorXd v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  project(v);
  v.normalize();

  const int max_iter = std::min(options.max_iterations, dim);
  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(n);
  for (int j = 0; j < max_iter; ++j) {
    basis.push_back(v);
    apply(g, v, w);
    project(w);
    const double a = v.dot(w);
    alpha.push_back(a);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
      project(w);
    }
    const double b = w.norm();

    const int k = static_cast<int>(alpha.size());
    const bool last = (j + 1 == max_iter) || b < 1e-10;
    if (last || k % 10 == 0) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
      Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                  : Eigen::VectorXd(0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& theta = tri.eigenvalues();
      const auto& s = tri.eigenvectors();
      result.smallest = theta[0];
      result.largest = theta[k - 1];
      result.smallest_residual = std::abs(b * s(k - 1, 0));
      result.largest_residual = std::abs(b * s(k - 1, k - 1));
      result.iterations = k;
      const double tol_lo = options.tolerance * std::max(1.0, std::abs(result.smallest));
      const double tol_hi = options.tolerance * std::max(1.0, std::abs(result.largest));
      if ((result.smallest_residual <= tol_lo && result.largest_residual <= tol_hi) || b < 1e-10) {
        result.converged = true;
        break;
      }
      if (last) break;
    }
    beta.push_back(b);
    v = w / b;
  }
  return result;
}

SpectrumReport iterative_spectrum(const RegularGraph& g, const LanczosOptions& options) {
  SpectrumReport r;
  r.n = g.num_vertices();
  r.d = g.degree();
  r.complete = false;
  if (r.n <= 1) {
    r.lambda2 = r.lambda_min = r.d;
    r.normalized_gap = 0.0;
    return r;
  }
  const auto lz = lanczos_extremes(g, true, options);
  require(lz.converged, ErrorCode::kDomainError, "Lanczos iteration did not converge");
  r.lambda2 = lz.largest;
  r.lambda_min = std::min(lz.smallest, static_cast<double>(r.d));
  r.lambda_abs = std::max(r.lambda2, -r.lambda_min);
  r.normalized_gap = r.d > 0 ? 1.0 - r.lambda2 / r.d : 0.0;
  return r;
}

}  // namespace polylab
