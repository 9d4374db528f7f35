#include "hyperbits/hyperball.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hyperbits/constants.hpp"

namespace hyperbits::hyperball {

double padded_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  return a.head(n).dot(b.head(n));
}

HyperbitState::HyperbitState(Eigen::VectorXd coords) : v_(std::move(coords)) {
  if (v_.size() == 0) throw std::invalid_argument("HyperbitState: need at least one coordinate");
  if (v_.norm() > 1.0 + kStructuralTol)
    throw std::invalid_argument("HyperbitState: norm exceeds 1 beyond 1e-10");
}

MeasurementVector::MeasurementVector(Eigen::VectorXd coords) : v_(std::move(coords)) {
  if (v_.size() == 0)
    throw std::invalid_argument("MeasurementVector: need at least one coordinate");
  if (std::abs(v_.norm() - 1.0) > kStructuralTol)
    throw std::invalid_argument("MeasurementVector: must be a unit vector within 1e-10");
}

double expect(const HyperbitState& state, const MeasurementVector& meas) {
  return padded_dot(state.coords(), meas.coords());
}

int sample(const HyperbitState& state, const MeasurementVector& meas, Rng& rng) {
  const double p_plus = 0.5 * (1.0 + expect(state, meas));
  return rng.uniform01() < p_plus ? +1 : -1;
}

HyperbitState scale(const HyperbitState& state, double lambda) {
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("scale: lambda must lie in [0, 1]");
  return HyperbitState(lambda * state.coords());
}

HyperbitState negated(const HyperbitState& state) { return HyperbitState(-state.coords()); }

}  // namespace hyperbits::hyperball
