#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "hyperbits/qsim.hpp"

namespace hyperbits::tsirelson {

// Bipartite state with per-site observable banks: alice[k] acts on the first
// factor (dim_a), bob[m] on the second (dim_b).
struct QuantumStrategy {
  QuantumStrategy(qsim::DensityMatrix rho, Eigen::Index dim_a, Eigen::Index dim_b,
                  std::vector<qsim::Observable> alice, std::vector<qsim::Observable> bob);

  qsim::DensityMatrix rho;
  Eigen::Index dim_a;
  Eigen::Index dim_b;
  std::vector<qsim::Observable> alice;
  std::vector<qsim::Observable> bob;
};

// Real-vector counterpart: two families in a common dimension, every norm
// <= 1 + 1e-10. Construction zero-pads all vectors to the common maximum.
struct VectorStrategy {
  VectorStrategy(std::vector<Eigen::VectorXd> xs, std::vector<Eigen::VectorXd> ys);

  Eigen::Index dim() const;

  std::vector<Eigen::VectorXd> xs;
  std::vector<Eigen::VectorXd> ys;
};

// tr(alice[k] (x) bob[m] rho)
double correlation(const QuantumStrategy& qs, std::size_t k, std::size_t m);

// Realize <x_k, y_m> as quantum correlations: anticommuting-family operators
// A_k = sum_i x_i gamma_i and B_m = (sum_i y_i gamma_i)^T on the maximally
// entangled state, so that tr(A (x) B |Phi><Phi|) = tr(A B^T)/dim = <x, y>.
QuantumStrategy embed(const VectorStrategy& vs);

// Inverse direction: purify rho to psi, then
//   x_k = realify((A_k (x) 1 (x) 1_E) psi),  y_m = realify((1 (x) B_m (x) 1_E) psi)
// with realify interleaving (Re, Im) per complex amplitude, which turns
// Re<u, v> into a real dot product. Index 0 of each family is the vector of
// the identity observable (the realified psi itself), so
//   <x_k, y_m> = tr(A_k (x) B_m rho)  with A_0 = B_0 = 1.
VectorStrategy extract(const QuantumStrategy& qs);

}  // namespace hyperbits::tsirelson
