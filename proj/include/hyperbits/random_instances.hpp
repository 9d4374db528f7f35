#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "hyperbits/hyperball.hpp"
#include "hyperbits/protocols.hpp"
#include "hyperbits/qsim.hpp"
#include "hyperbits/queries.hpp"
#include "hyperbits/rng.hpp"
#include "hyperbits/tsirelson.hpp"

// Seeded generators for sweep and test instances. Every function consumes
// the RNG in a fixed order, so a fixed seed reproduces identical objects.

namespace hyperbits::random_instances {

Eigen::VectorXd random_unit_vector(Eigen::Index dim, Rng& rng);

// Uniform in the closed unit ball (unit direction scaled by u^(1/dim)).
Eigen::VectorXd random_ball_vector(Eigen::Index dim, Rng& rng);

// Square matrix of iid standard complex normal entries.
qsim::CMatrix random_ginibre(Eigen::Index dim, Rng& rng);

// G G^dag normalized to unit trace.
qsim::DensityMatrix random_density(Eigen::Index dim, Rng& rng);

// Haar-distributed via Ginibre QR with the phase convention fixed.
qsim::CMatrix random_unitary(Eigen::Index dim, Rng& rng);

// Hermitian involution U diag(+-1) U^dag. `traceless` balances the spectrum
// and requires even dimension.
qsim::Observable random_involution(Eigen::Index dim, bool traceless, Rng& rng);

// Hermitian with spectrum drawn uniformly from [-1, 1].
qsim::Observable random_bounded_observable(Eigen::Index dim, Rng& rng);

tsirelson::VectorStrategy random_vector_strategy(std::size_t count_x, std::size_t count_y,
                                                 Eigen::Index dim, Rng& rng);

// Random mixed state on dim_a * dim_b with banks mixing involutions and
// merely bounded observables on both sides.
tsirelson::QuantumStrategy random_quantum_strategy(Eigen::Index dim_a, Eigen::Index dim_b,
                                                   std::size_t count_a, std::size_t count_b,
                                                   Rng& rng);

enum class StateKind {
  MaxEntangled,  // |Phi><Phi| with traceless projective observables both sides
  Ginibre,       // random mixed state, projective Alice, bounded Bob
};

// Equal local dimensions; MaxEntangled requires even dim (traceless
// involutions do not exist in odd dimension).
protocols::EBitProtocol random_ebit_protocol(StateKind kind, Eigen::Index dim,
                                             std::size_t inputs_a, std::size_t inputs_b, Rng& rng);

// Direct-measurement protocol: ball-vector encodings, unit measurements with
// meas(b, -1) = -meas(b, +1), c = 0, q = 0.
protocols::HyperbitProtocol random_direct_hyperbit_protocol(std::size_t inputs_a,
                                                            std::size_t inputs_b,
                                                            Eigen::Index dim, Rng& rng);

queries::EncodingScheme random_encoding(std::size_t inputs, Eigen::Index dim,
                                        bool unit_hyperbits, bool uniform_priors, Rng& rng);

std::vector<hyperball::MeasurementVector> random_measurements(std::size_t count,
                                                              Eigen::Index dim, Rng& rng);

}  // namespace hyperbits::random_instances
