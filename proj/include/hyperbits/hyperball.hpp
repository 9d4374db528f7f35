#pragma once

#include <Eigen/Dense>

#include "hyperbits/rng.hpp"

namespace hyperbits::hyperball {

// Dot product where the shorter vector is implicitly zero-padded, so states
// and measurements of different dimensions compose without copying.
double padded_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Point of the closed unit ball: |v| <= 1 + 1e-10. One hyperbit of
// communication is exactly one such vector.
class HyperbitState {
 public:
  explicit HyperbitState(Eigen::VectorXd coords);

  Eigen::Index dim() const { return v_.size(); }
  double norm() const { return v_.norm(); }
  const Eigen::VectorXd& coords() const { return v_; }

 private:
  Eigen::VectorXd v_;
};

// Unit vector defining the +-w measurement pair; ||w| - 1| <= 1e-10.
class MeasurementVector {
 public:
  explicit MeasurementVector(Eigen::VectorXd coords);

  Eigen::Index dim() const { return v_.size(); }
  const Eigen::VectorXd& coords() const { return v_; }

 private:
  Eigen::VectorXd v_;
};

// <w, v>: the expectation of the +-1 outcome.
double expect(const HyperbitState& state, const MeasurementVector& meas);

// One +-1 outcome drawn with P(+1) = (1 + expect) / 2.
int sample(const HyperbitState& state, const MeasurementVector& meas, Rng& rng);

// Contraction toward the origin, lambda in [0, 1].
HyperbitState scale(const HyperbitState& state, double lambda);

// Antipodal state -v (norm unchanged); expectations change sign.
HyperbitState negated(const HyperbitState& state);

}  // namespace hyperbits::hyperball
