#pragma once

#include <cstdint>
#include <vector>

#include "polylab/bigint.hpp"
#include "polylab/graph.hpp"

namespace polylab {

// Polynomial with exact integer coefficients; coefficient(i) multiplies x^i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;
  // Real parts of the roots (companion-matrix eigenvalues), ascending.
  std::vector<double> roots() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// p_0 = 1, p_1 = x, p_2 = x^2 - d, p_{t+1} = x p_t - (d-1) p_{t-1}.
IntPolynomial geronimus(int t, int d);
std::vector<IntPolynomial> geronimus_family(int t_max, int d);

// Dense n x n matrix with exact 64-bit entries; arithmetic throws kOverflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(Vertex n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(Vertex n);
  static IntMatrix adjacency(const SimpleGraph& g);

  Vertex size() const { return n_; }
  std::int64_t operator()(Vertex i, Vertex j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t& operator()(Vertex i, Vertex j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::int64_t> data_;
};

// Counts of non-backtracking walks of length t between every pair of vertices.
IntMatrix nbw_matrix(const RegularGraph& g, int t);

// p(A) by Horner's rule with exact arithmetic.
IntMatrix evaluate_at_adjacency(const IntPolynomial& p, const SimpleGraph& g);

struct NbwConnectivity {
  bool connected = false;
  bool bipartite = false;
};

// Connectivity and bipartiteness of the graph whose edges are the positive off-diagonal
// entries of the length-t walk matrix; a positive diagonal entry counts as a loop.
NbwConnectivity nbw_connected_nonbipartite(const RegularGraph& g, int t);

}  // namespace polylab
