#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polylab/bigint.hpp"
#include "polylab/graph.hpp"

namespace polylab {

// b + 2 sqrt(a - b - 1).
double abtb_value(std::int64_t a, std::int64_t b);

// Closed walks counted per start vertex by stack words of length t (no full-cancel term):
// sum_{0 <= k < t/2} t! / (k! k! (t-2k)!) / (k+1) * b^(t-2k) * (a-b-1)^k.
BigInt catalan_walk_census(std::int64_t a, std::int64_t b, int t);

// trace(A^t) for t = 0..t_max, exact.
std::vector<BigInt> closed_walk_traces(const SimpleGraph& g, int t_max);

// Base-2 entropy objective H(alpha, alpha, 1-2alpha) + alpha log(a-b-1) + (1-2alpha) log b.
double entropy_objective(double alpha, std::int64_t a, std::int64_t b);

struct Maximum {
  double argmax = 0.0;
  double value = 0.0;
};

// Numerical maximizer over alpha in (0, 1/2).
Maximum entropy_argmax(std::int64_t a, std::int64_t b);
// Closed form: alpha = c / (b + 2c), value log2(b + 2c), c = sqrt(a - b - 1).
Maximum entropy_closed_form(std::int64_t a, std::int64_t b);

// Entropy objective plus beta^2 log(1 + r/(a-b-1)) + beta (1-2beta) log(1 - r/(b(a-b-1))).
// Degenerate parameters (b <= 1 or a - b <= 2) throw kDegenerate.
double tradeoff_objective(double beta, std::int64_t a, std::int64_t b, double r);
Maximum tradeoff_argmax(std::int64_t a, std::int64_t b, double r);

inline constexpr int kTableFirst = 2;
inline constexpr int kTableLast = 8;

// cells[row][col] with row = a-b-1 in 2..8 and col = b in 2..8:
// (b + 2c)^2 / log2(e) * (max_beta S(beta, a, b, 1) - log2(b + 2c)).
using TradeoffTable = std::array<std::array<double, 7>, 7>;
TradeoffTable tradeoff_table();

// b (a-b-1) (c - 1) / ((b + c) min(b+1, a-b-1)), c = sqrt(a-b-1).
double delta_threshold(std::int64_t a, std::int64_t b);

// min(R, ceil(b (c^3 - c^2) / (b + c))) with R = ceil(min(b+1, a-b-1) delta).
std::int64_t optimal_r(std::int64_t a, std::int64_t b, double delta);

struct TradeoffEpsilon {
  std::int64_t r = 0;
  double beta = 0.0;
  double epsilon = 0.0;  // 1 + epsilon = 2^(max S - log2(b + 2c))
};

TradeoffEpsilon tradeoff_epsilon(std::int64_t a, std::int64_t b, double delta);

struct LocalCoordinates {
  std::vector<Vertex> phi;  // N(x) minus N(z) and z
  std::vector<Vertex> psi;  // N(x) and N(z)
  std::int64_t cross_edges = 0;
};

LocalCoordinates local_coordinates(const SimpleGraph& g, Vertex x, Vertex z);

struct RegularityPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

// Throws kNotABRegular unless the graph is a-regular with b-regular links.
RegularityPair ab_regularity(const SimpleGraph& g);

// Least number of phi-psi edges over all ordered edges (x, z).
std::int64_t cross_edge_min(const SimpleGraph& g);

}  // namespace polylab
