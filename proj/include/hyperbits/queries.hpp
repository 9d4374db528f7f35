#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <vector>

#include "hyperbits/hyperball.hpp"

namespace hyperbits::queries {

// Square +-1 matrix of size 2^n whose row i lists the value of query i on
// every message j. Rows must be pairwise orthogonal; row and column Gram
// matrices are both checked exactly in integer arithmetic.
class QueryMatrix {
 public:
  explicit QueryMatrix(Eigen::MatrixXi entries);

  // Sylvester construction: f(i, j) = (-1)^popcount(i & j).
  static QueryMatrix hadamard(int n);

  int n() const { return n_; }
  Eigen::Index size() const { return f_.rows(); }
  int entry(Eigen::Index i, Eigen::Index j) const { return f_(i, j); }
  const Eigen::MatrixXi& entries() const { return f_; }

 private:
  Eigen::MatrixXi f_;
  int n_;
};

// Prior distribution over messages plus one hyperbit per message,
// zero-padded to a common dimension at construction.
class EncodingScheme {
 public:
  EncodingScheme(std::vector<double> priors, std::vector<hyperball::HyperbitState> hyperbits);

  std::size_t size() const { return priors_.size(); }
  Eigen::Index dim() const { return hyperbits_.front().dim(); }
  const std::vector<double>& priors() const { return priors_; }
  const std::vector<hyperball::HyperbitState>& hyperbits() const { return hyperbits_; }

 private:
  std::vector<double> priors_;
  std::vector<hyperball::HyperbitState> hyperbits_;
};

// Appends zero-probability, zero-vector messages up to target_size (the way
// a non-power-of-two message count is brought to 2^n).
EncodingScheme pad_inputs(const EncodingScheme& enc, std::size_t target_size);

// Per-query signal analysis under the bias-optimal measurement x_i / |x_i|.
struct BiasReport {
  std::vector<Eigen::VectorXd> xs;  // x_i = sum_j f(i,j) p_j h_j
  std::vector<double> biases;       // E_i = |x_i|
  std::vector<hyperball::MeasurementVector> optimal_meas;  // x_i / |x_i|, e_1 for x_i = 0
  Eigen::VectorXd x_avg;            // sum_j p_j h_j
  double lhs;                       // sum_i E_i^2
  double rhs;                       // 2^n sum_j p_j^2 |h_j|^2
  std::vector<bool> degenerate;     // max(P(I_i = +1), P(I_i = -1)) > 1 - 1e-6
};

BiasReport biases(const QueryMatrix& f, const EncodingScheme& enc);

// | sum_i E_i^2 - 2^n sum_j p_j^2 |h_j|^2 |
double check_identity(const QueryMatrix& f, const EncodingScheme& enc);

// 2^n sum_j p_j^2 |h_j|^2 - sum_i <m_i, x_i>^2. Nonnegative up to roundoff
// for any measurement bank; zero for the optimal one.
double check_suboptimal(const QueryMatrix& f, const EncodingScheme& enc,
                        const std::vector<hyperball::MeasurementVector>& meas);

// Guessing a0, a1 and a0 xor a1 from one hyperbit under uniform priors,
// against the one-bit classical benchmark (3/2)(1 + 1/sqrt 3). Message j
// carries bits (a0, a1) = (j >> 1, j & 1).
struct KoenigReport {
  std::array<double, 3> biases;    // E(a0), E(a1), E(a0 xor a1)
  double p_sum;                    // sum_i (1 + E_i) / 2
  double e_sq_sum;                 // sum_i E_i^2
  double classical_bound;          // (3/2)(1 + 1/sqrt 3)
  bool within_strengthened_bound;  // e_sq_sum <= 1 + 1e-9
};

// Requires exactly 4 messages with uniform priors.
KoenigReport koenig_compare(const EncodingScheme& enc);

}  // namespace hyperbits::queries
