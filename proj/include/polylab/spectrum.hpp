#pragma once

#include <cstdint>
#include <vector>

#include "polylab/graph.hpp"

namespace polylab {

struct EigenGroup {
  double value = 0.0;
  std::int64_t mult = 0;
};

struct SpectrumReport {
  Vertex n = 0;
  Vertex d = 0;
  // Descending. Empty when only the extremes were computed (complete == false).
  std::vector<EigenGroup> eigenvalues;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double lambda_abs = 0.0;
  double normalized_gap = 0.0;
  bool complete = true;
};

struct SpectrumOptions {
  Vertex dense_limit = 20'000;
  double group_tolerance = 1e-8;
  // Larger graphs fall back to Lanczos when true, otherwise throw kTooLarge.
  bool allow_iterative = false;
};

// Ascending eigenvalues of the adjacency matrix (dense symmetric solver).
std::vector<double> adjacency_eigenvalues(const SimpleGraph& g, Vertex dense_limit = 20'000);

// Groups sorted values whose consecutive gaps are within tolerance; output is descending.
std::vector<EigenGroup> group_eigenvalues(std::vector<double> values, double tolerance = 1e-8);

SpectrumReport spectrum(const RegularGraph& g, const SpectrumOptions& options = {});
SpectrumReport report_from_groups(std::vector<EigenGroup> groups, Vertex d);

struct LanczosOptions {
  int max_iterations = 300;
  double tolerance = 1e-8;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct LanczosResult {
  double largest = 0.0;
  double smallest = 0.0;
  double largest_residual = 0.0;
  double smallest_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Extreme eigenvalues of the adjacency operator restricted to the complement of the
// constant vector when deflate_constant is set (for a regular graph: lambda2 and lambda_min).
LanczosResult lanczos_extremes(const SimpleGraph& g, bool deflate_constant, const LanczosOptions& options = {});

// lambda2 / lambda_min of a regular graph by Lanczos; eigenvalue list left empty.
SpectrumReport iterative_spectrum(const RegularGraph& g, const LanczosOptions& options = {});

}  // namespace polylab
