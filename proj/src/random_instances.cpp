#include "hyperbits/random_instances.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hyperbits::random_instances {

Eigen::VectorXd random_unit_vector(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_unit_vector: dimension must be positive");
  Eigen::VectorXd v(dim);
  double norm2 = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.normal();
    norm2 = v.squaredNorm();
  } while (norm2 == 0.0);
  return v / std::sqrt(norm2);
}

Eigen::VectorXd random_ball_vector(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_ball_vector: dimension must be positive");
  const double r = std::pow(rng.uniform01(), 1.0 / static_cast<double>(dim));
  return r * random_unit_vector(dim, rng);
}

qsim::CMatrix random_ginibre(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_ginibre: dimension must be positive");
  qsim::CMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = qsim::Complex(rng.normal(), rng.normal());
  return g;
}

qsim::DensityMatrix random_density(Eigen::Index dim, Rng& rng) {
  const qsim::CMatrix g = random_ginibre(dim, rng);
  qsim::CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  qsim::CMatrix sym = 0.5 * (rho + rho.adjoint());
  return qsim::DensityMatrix(std::move(sym));
}

qsim::CMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  const qsim::CMatrix g = random_ginibre(dim, rng);
  Eigen::HouseholderQR<qsim::CMatrix> qr(g);
  qsim::CMatrix q = qr.householderQ();
  const qsim::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const qsim::Complex d = r(i, i);
    const double a = std::abs(d);
    q.col(i) *= a == 0.0 ? qsim::Complex(1, 0) : d / a;
  }
  return q;
}

qsim::Observable random_involution(Eigen::Index dim, bool traceless, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_involution: dimension must be positive");
  if (traceless && dim % 2 != 0)
    throw std::invalid_argument("random_involution: traceless requires even dimension");
  const qsim::CMatrix u = random_unitary(dim, rng);
  Eigen::VectorXd signs(dim);
  if (traceless) {
    for (Eigen::Index i = 0; i < dim; ++i) signs(i) = i < dim / 2 ? 1.0 : -1.0;
  } else {
    for (Eigen::Index i = 0; i < dim; ++i) signs(i) = rng.pm1();
  }
  const qsim::CMatrix m = u * signs.cast<qsim::Complex>().asDiagonal() * u.adjoint();
  qsim::CMatrix sym = 0.5 * (m + m.adjoint());
  return qsim::Observable(std::move(sym));
}

qsim::Observable random_bounded_observable(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_bounded_observable: dimension must be positive");
  const qsim::CMatrix u = random_unitary(dim, rng);
  Eigen::VectorXd evs(dim);
  for (Eigen::Index i = 0; i < dim; ++i) evs(i) = rng.uniform(-1.0, 1.0);
  const qsim::CMatrix m = u * evs.cast<qsim::Complex>().asDiagonal() * u.adjoint();
  qsim::CMatrix sym = 0.5 * (m + m.adjoint());
  return qsim::Observable(std::move(sym));
}

tsirelson::VectorStrategy random_vector_strategy(std::size_t count_x, std::size_t count_y,
                                                 Eigen::Index dim, Rng& rng) {
  std::vector<Eigen::VectorXd> xs;
  std::vector<Eigen::VectorXd> ys;
  xs.reserve(count_x);
  ys.reserve(count_y);
  for (std::size_t k = 0; k < count_x; ++k) xs.push_back(random_ball_vector(dim, rng));
  for (std::size_t m = 0; m < count_y; ++m) ys.push_back(random_ball_vector(dim, rng));
  return tsirelson::VectorStrategy(std::move(xs), std::move(ys));
}

tsirelson::QuantumStrategy random_quantum_strategy(Eigen::Index dim_a, Eigen::Index dim_b,
                                                   std::size_t count_a, std::size_t count_b,
                                                   Rng& rng) {
  qsim::DensityMatrix rho = random_density(dim_a * dim_b, rng);
  std::vector<qsim::Observable> alice;
  std::vector<qsim::Observable> bob;
  alice.reserve(count_a);
  bob.reserve(count_b);
  for (std::size_t k = 0; k < count_a; ++k)
    alice.push_back(k % 2 == 0 ? random_involution(dim_a, false, rng)
                               : random_bounded_observable(dim_a, rng));
  for (std::size_t m = 0; m < count_b; ++m)
    bob.push_back(m % 2 == 1 ? random_involution(dim_b, false, rng)
                             : random_bounded_observable(dim_b, rng));
  return tsirelson::QuantumStrategy(std::move(rho), dim_a, dim_b, std::move(alice),
                                    std::move(bob));
}

protocols::EBitProtocol random_ebit_protocol(StateKind kind, Eigen::Index dim,
                                             std::size_t inputs_a, std::size_t inputs_b,
                                             Rng& rng) {
  std::vector<qsim::Observable> alice;
  std::vector<std::array<qsim::Observable, 2>> bob;
  alice.reserve(inputs_a);
  bob.reserve(inputs_b);
  if (kind == StateKind::MaxEntangled) {
    const qsim::CVector phi = qsim::maximally_entangled(dim);
    qsim::CMatrix rho = phi * phi.adjoint();
    for (std::size_t a = 0; a < inputs_a; ++a) alice.push_back(random_involution(dim, true, rng));
    for (std::size_t b = 0; b < inputs_b; ++b)
      bob.push_back({random_involution(dim, true, rng), random_involution(dim, true, rng)});
    return protocols::EBitProtocol(qsim::DensityMatrix(std::move(rho)), dim, dim,
                                   std::move(alice), std::move(bob));
  }
  qsim::DensityMatrix rho = random_density(dim * dim, rng);
  for (std::size_t a = 0; a < inputs_a; ++a) alice.push_back(random_involution(dim, false, rng));
  for (std::size_t b = 0; b < inputs_b; ++b)
    bob.push_back({random_bounded_observable(dim, rng), random_bounded_observable(dim, rng)});
  return protocols::EBitProtocol(std::move(rho), dim, dim, std::move(alice), std::move(bob));
}

protocols::HyperbitProtocol random_direct_hyperbit_protocol(std::size_t inputs_a,
                                                            std::size_t inputs_b,
                                                            Eigen::Index dim, Rng& rng) {
  std::vector<hyperball::HyperbitState> encode;
  encode.reserve(inputs_a);
  for (std::size_t a = 0; a < inputs_a; ++a) encode.emplace_back(random_ball_vector(dim, rng));
  std::vector<std::array<protocols::BobAction, 2>> bob;
  bob.reserve(inputs_b);
  for (std::size_t b = 0; b < inputs_b; ++b) {
    const Eigen::VectorXd m = random_unit_vector(dim, rng);
    bob.push_back({protocols::BobAction(hyperball::MeasurementVector(-m), 0.0, 0.0),
                   protocols::BobAction(hyperball::MeasurementVector(m), 0.0, 0.0)});
  }
  return protocols::HyperbitProtocol(std::move(encode), std::move(bob));
}

queries::EncodingScheme random_encoding(std::size_t inputs, Eigen::Index dim,
                                        bool unit_hyperbits, bool uniform_priors, Rng& rng) {
  if (inputs == 0) throw std::invalid_argument("random_encoding: need at least one input");
  std::vector<double> priors(inputs, 1.0 / static_cast<double>(inputs));
  if (!uniform_priors) {
    double sum = 0.0;
    for (double& p : priors) {
      p = rng.uniform01() + 1e-12;
      sum += p;
    }
    for (double& p : priors) p /= sum;
  }
  std::vector<hyperball::HyperbitState> hyperbits;
  hyperbits.reserve(inputs);
  for (std::size_t j = 0; j < inputs; ++j)
    hyperbits.emplace_back(unit_hyperbits ? random_unit_vector(dim, rng)
                                          : random_ball_vector(dim, rng));
  return queries::EncodingScheme(std::move(priors), std::move(hyperbits));
}

std::vector<hyperball::MeasurementVector> random_measurements(std::size_t count,
                                                              Eigen::Index dim, Rng& rng) {
  std::vector<hyperball::MeasurementVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.emplace_back(random_unit_vector(dim, rng));
  return out;
}

}  // namespace hyperbits::random_instances
