#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polylab/graph.hpp"
#include "polylab/polygraph.hpp"
#include "polylab/spectrum.hpp"

namespace polylab {

// chi_S(lambda_1..lambda_m) = sum over orderings w of S of prod_j p_{w_j}(lambda_j),
// with p_t the walk polynomials of degree d.
class ChiEvaluator {
 public:
  ChiEvaluator(const DistanceMultiset& s, int d);

  double operator()(std::span<const double> lambdas) const;

 private:
  std::vector<std::vector<int>> omega_;
  std::vector<std::vector<double>> coeffs_;  // coeffs_[t] = coefficients of p_t
};

double chi(const DistanceMultiset& s, int d, std::span<const double> lambdas);

// Polygraph spectrum from the base spectrum, one chi value per ordered tuple of eigenvalues.
SpectrumReport polygraph_spectrum_by_formula(const RegularGraph& base, const DistanceMultiset& s,
                                             const SizeLimits& limits = default_limits());

// multinomial * mu^s * d^(k-1) * (d-1)^(N-k-s+1), mu = max(lambda, 2 sqrt(d-1)),
// k = number of distinct values, s = min(S), N = sum(S).
double lambda_bound(const DistanceMultiset& s, int d, double lambda_base);
double lambda_bound_111(int d, double lambda_base);  // mu d^2
double lambda_bound_123(int d, double lambda_base);  // 6 mu d^2 (d-1)^3

struct EmlResult {
  double lower = 0.0;
  double upper = 0.0;
  double observed = 0.0;
};

// Interval for the number of ordered pairs (a, b) in A x B with a ~ b.
EmlResult eml_bound(double degree, double n, double lambda, double size_a, double size_b);
EmlResult eml_bound(const RegularGraph& g, double lambda, std::span<const Vertex> a, std::span<const Vertex> b);

// Weighted version: sum over x ~ y of w_P(x) w_Q(y).
EmlResult eml_bound_multiset(double degree, double n, double lambda, double mass_p, double square_p,
                             double mass_q, double square_q);
EmlResult eml_bound_multiset(const RegularGraph& g, double lambda, std::span<const double> wp,
                             std::span<const double> wq);

struct DesaiRaoResult {
  double psi = 0.0;
  double bound = 0.0;       // -D + psi^2 / (4 D)
  double lambda_min = 0.0;
  bool holds = false;
};

// Exhaustive over vertex subsets and their 2-colourings; n <= 14.
DesaiRaoResult desai_rao_check(const RegularGraph& g);

}  // namespace polylab
