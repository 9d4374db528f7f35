#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hyperbits/constants.hpp"
#include "hyperbits/qsim.hpp"

namespace hyperbits::clifford {

// Family of d pairwise-anticommuting Hermitian involutions on dimension
// 2^ceil(d/2):  gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij I.
// Built deterministically from the iterative tensor recipe
//   gamma_{2j-1} = sz^(j-1) (x) sx (x) I...,  gamma_{2j} = sz^(j-1) (x) sy (x) I...
// and re-validated after construction.
class GammaFamily {
 public:
  static GammaFamily generate(int d, int max_d = kMaxGammaGenerators);

  int count() const { return static_cast<int>(gammas_.size()); }
  Eigen::Index dim() const { return dim_; }
  const qsim::CMatrix& gamma(int i) const { return gammas_.at(static_cast<std::size_t>(i)); }

  // sum_i v_i gamma_i; Hermitian with spectrum {+-|v|}. v may be shorter
  // than the family (missing coordinates are zero).
  qsim::CMatrix embed_vector(const Eigen::VectorXd& v) const;

 private:
  GammaFamily(Eigen::Index dim, std::vector<qsim::CMatrix> gammas)
      : dim_(dim), gammas_(std::move(gammas)) {}

  Eigen::Index dim_;
  std::vector<qsim::CMatrix> gammas_;
};

}  // namespace hyperbits::clifford
