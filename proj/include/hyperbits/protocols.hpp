#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <vector>

#include "hyperbits/hyperball.hpp"
#include "hyperbits/qsim.hpp"
#include "hyperbits/rng.hpp"

namespace hyperbits::protocols {

// One-round protocol: Alice measures alice[a] on her half of rho, sends the
// +-1 outcome A; Bob measures bob[b][(A+1)/2] on his half and answers +-1.
// Alice's bank must be projective (A^2 = 1 within 1e-9); Bob's observables
// only need spectrum in [-1, 1].
struct EBitProtocol {
  EBitProtocol(qsim::DensityMatrix rho, Eigen::Index dim_a, Eigen::Index dim_b,
               std::vector<qsim::Observable> alice,
               std::vector<std::array<qsim::Observable, 2>> bob);

  std::size_t inputs_a() const { return alice.size(); }
  std::size_t inputs_b() const { return bob.size(); }

  qsim::DensityMatrix rho;
  Eigen::Index dim_a;
  Eigen::Index dim_b;
  std::vector<qsim::Observable> alice;
  std::vector<std::array<qsim::Observable, 2>> bob;  // [0]: A = -1, [1]: A = +1
};

// Bob's reaction to (input b, message A) in a hyperbit protocol: measure
// `meas` on the received state, then postprocess the raw outcome r by
// discarding with probability |c| (outputting discard_output = sgn c) and
// otherwise flipping with probability q. The output expectation is the
// affine map  c + c' * <r>  with slope c' = (1 - |c|)(1 - 2q), so feasible
// slopes satisfy |c| + |c'| <= 1 by construction.
struct BobAction {
  BobAction(hyperball::MeasurementVector meas, double c, double flip_prob);

  double slope() const;  // c' = (1 - |c|)(1 - 2 flip_prob)

  hyperball::MeasurementVector meas;
  double c;
  double flip_prob;
  double discard_prob;  // = |c|
  int discard_output;   // sgn(c), +1 when c = 0
};

// Alice sends the coin-flipped state A * encode(a) for a shared fair coin A;
// Bob applies bob[b][(A+1)/2].
struct HyperbitProtocol {
  HyperbitProtocol(std::vector<hyperball::HyperbitState> encode,
                   std::vector<std::array<BobAction, 2>> bob);

  std::size_t inputs_a() const { return encode.size(); }
  std::size_t inputs_b() const { return bob.size(); }

  std::vector<hyperball::HyperbitState> encode;
  std::vector<std::array<BobAction, 2>> bob;  // [0]: A = -1, [1]: A = +1
};

// c + slope * raw_expectation
double postprocess_expectation(const BobAction& action, double raw_expectation);

// tr(alice[a] (x) 1 rho): the mean of Alice's message before symmetrization.
double message_bias(const EBitProtocol& p, std::size_t a);

// Exact answer expectation sum_A tr(P_{a,A} (x) bob[b][A] rho) with
// P_{a,A} = (1 + A alice[a]) / 2.
double eval_ebit(const EBitProtocol& p, std::size_t a, std::size_t b);

// Exact answer expectation averaged over the shared coin:
// (1/2) sum_A [ c(b,A) + c'(b,A) <A encode(a), meas(b,A)> ].
double eval_hyperbit(const HyperbitProtocol& h, std::size_t a, std::size_t b);

// One simulated run each (message draw + answer draw, resp. coin + raw
// measurement + postprocessing draws).
int sample_ebit(const EBitProtocol& p, std::size_t a, std::size_t b, Rng& rng);
int sample_hyperbit(const HyperbitProtocol& h, std::size_t a, std::size_t b, Rng& rng);

// Zero every message mean by adjoining a shared classical coin register to
// both sides: the state is doubled with the correlated coin
// (|00><00| + |11><11|)/2, Alice's observables become A (x) sz (message
// A' = C A), and Bob's decode the coin back. Answer expectations are
// preserved exactly.
EBitProtocol symmetrize(const EBitProtocol& p);

// Realize an e-bit protocol as a hyperbit protocol with identical answer
// expectations. Symmetrizes first when some |message_bias| > 1e-12, then
// extracts vectors and splits each y(b,A) = c y_1 + c' y_perp-hat with
// y_perp-hat the normalized component orthogonal to the identity vector.
// Throws PostprocessingInfeasibleError when |c| + |c'| > 1 + 1e-9 for some
// branch. Degenerate branches (|c| = 1, or y parallel to y_1) get a fixed
// unit measurement orthogonal to y_1 and slope 0.
HyperbitProtocol ebit_to_hyperbit(const EBitProtocol& p);

// Realize a direct-measurement hyperbit protocol (every c = 0, q = 0) as an
// e-bit protocol with identical answer expectations. Encodings are dilated
// to unit norm with one extra coordinate so Alice's embedded observables are
// involutions; Bob's (b, A) measurements reduce to the effective vector
// (meas(b,+1) - meas(b,-1)) / 2 and his observables carry the message sign.
// Throws std::invalid_argument for protocols with nontrivial postprocessing.
EBitProtocol hyperbit_to_ebit(const HyperbitProtocol& h);

}  // namespace hyperbits::protocols
