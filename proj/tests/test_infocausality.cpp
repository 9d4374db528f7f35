#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "hyperbits/constants.hpp"
#include "hyperbits/hyperball.hpp"
#include "hyperbits/infocausality.hpp"
#include "hyperbits/queries.hpp"
#include "hyperbits/random_instances.hpp"
#include "hyperbits/rng.hpp"

using namespace hyperbits;
using hyperball::HyperbitState;
using hyperball::MeasurementVector;
using infocausality::BitEnsemble;
using queries::EncodingScheme;
using queries::QueryMatrix;

namespace {

// the four messages spread over three orthogonal signal directions
EncodingScheme symmetric_two_bit() {
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<HyperbitState> encode;
  for (int j = 0; j < 4; ++j) {
    const int a0 = j >> 1, a1 = j & 1;
    encode.emplace_back(Eigen::Vector3d((a0 ? -r : r), (a1 ? -r : r), ((a0 ^ a1) ? -r : r)));
  }
  return EncodingScheme({0.25, 0.25, 0.25, 0.25}, encode);
}

}  // namespace

TEST_CASE("binary_entropy hits the exact landmarks") {
  CHECK(infocausality::binary_entropy(0.5) == 1.0);
  CHECK(infocausality::binary_entropy(0.0) == 0.0);
  CHECK(infocausality::binary_entropy(1.0) == 0.0);
  CHECK(std::abs(infocausality::binary_entropy(0.11) - 0.499915958164528) <= kTightTol);
  CHECK(infocausality::binary_entropy(0.3) == infocausality::binary_entropy(0.7));
  CHECK_THROWS_AS(infocausality::binary_entropy(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(infocausality::binary_entropy(1.1), std::invalid_argument);
}

TEST_CASE("mutual_information recognizes perfect, independent and noisy pairs") {
  CHECK(infocausality::mutual_information({{{0.5, 0.0}, {0.0, 0.5}}}) == 1.0);
  CHECK(infocausality::mutual_information({{{0.25, 0.25}, {0.25, 0.25}}}) == 0.0);

  const double noisy = infocausality::mutual_information({{{0.4, 0.1}, {0.1, 0.4}}});
  CHECK(std::abs(noisy - 0.2780719051126377) <= kTightTol);
  CHECK(std::abs(noisy - (1.0 - infocausality::binary_entropy(0.2))) <= kTightTol);

  // swapping the two parties changes nothing
  const std::array<std::array<double, 2>, 2> skew{{{0.35, 0.15}, {0.05, 0.45}}};
  const std::array<std::array<double, 2>, 2> swapped{{{0.35, 0.05}, {0.15, 0.45}}};
  CHECK(std::abs(infocausality::mutual_information(skew) -
                 infocausality::mutual_information(swapped)) <= kTightTol);

  CHECK_THROWS_AS(infocausality::mutual_information({{{0.5, 0.0}, {0.0, 0.4}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(infocausality::mutual_information({{{1.2, -0.2}, {0.0, 0.0}}}),
                  std::invalid_argument);
}

TEST_CASE("the quadratic entropy bound holds across the whole interval") {
  CHECK(infocausality::taylor_bound_check(1) <= kTightTol);
  CHECK(infocausality::taylor_bound_check(1000) <= kTightTol);
  CHECK_THROWS_AS(infocausality::taylor_bound_check(0), std::invalid_argument);
}

TEST_CASE("BitEnsemble admits exactly the balanced independent rows") {
  QueryMatrix f = QueryMatrix::hadamard(2);
  CHECK_NOTHROW(BitEnsemble(f, {1, 2, 3}));
  CHECK_THROWS_AS(BitEnsemble(f, {0, 1}), std::invalid_argument);   // constant row
  CHECK_THROWS_AS(BitEnsemble(f, {1, 1}), std::invalid_argument);   // correlated pair
  CHECK_THROWS_AS(BitEnsemble(f, {4}), std::invalid_argument);      // out of range
  CHECK_THROWS_AS(BitEnsemble(f, {}), std::invalid_argument);
  CHECK_THROWS_AS(BitEnsemble(f, {1, 2, 3, 3}), std::invalid_argument);  // too many
}

TEST_CASE("a perfect one-bit protocol carries exactly one bit") {
  Eigen::VectorXd plus(1), minus(1);
  plus << 1.0;
  minus << -1.0;
  const EncodingScheme enc({0.5, 0.5}, {HyperbitState(plus), HyperbitState(minus)});
  const BitEnsemble ens(QueryMatrix::hadamard(1), {1});
  const auto meas = infocausality::optimal_measurements(ens, enc);
  const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);
  CHECK(rep.mi[0] == 1.0);
  CHECK(std::abs(rep.bound_terms[0] - 1.0) <= kTightTol);
  CHECK(rep.ic_ok);
  CHECK(rep.dominance_ok);
  CHECK(rep.bound_ok);
}

TEST_CASE("empty encodings carry nothing") {
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  const EncodingScheme enc({0.25, 0.25, 0.25, 0.25},
                           std::vector<HyperbitState>(4, HyperbitState(zero)));
  const BitEnsemble ens(QueryMatrix::hadamard(2), {1, 2, 3});
  const auto meas = infocausality::optimal_measurements(ens, enc);
  const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);
  CHECK(rep.mi_sum == 0.0);
  CHECK(rep.bound_sum == 0.0);
}

TEST_CASE("the symmetric encoding splits one bit three equal ways") {
  const EncodingScheme enc = symmetric_two_bit();
  const BitEnsemble ens(QueryMatrix::hadamard(2), {1, 2, 3});
  const auto meas = infocausality::optimal_measurements(ens, enc);
  const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);

  for (double mi : rep.mi) CHECK(std::abs(mi - 0.2559924487509986) <= kTightTol);
  CHECK(std::abs(rep.mi_sum - 0.7679773462529957) <= kTightTol);
  for (double b : rep.bound_terms) CHECK(std::abs(b - 1.0 / 3.0) <= kTightTol);
  CHECK(std::abs(rep.bound_sum - 1.0) <= kTightTol);
  CHECK(rep.ic_ok);
  CHECK(rep.dominance_ok);
  CHECK(rep.bound_ok);
}

TEST_CASE("random unit encodings respect the audit term by term") {
  Rng rng(127);
  const BitEnsemble ens(QueryMatrix::hadamard(2), {1, 2, 3});
  for (int trial = 0; trial < 50; ++trial) {
    const auto enc = random_instances::random_encoding(4, 3, true, true, rng);
    const auto meas = infocausality::optimal_measurements(ens, enc);
    const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);
    CHECK(rep.ic_ok);
    CHECK(rep.dominance_ok);
    CHECK(rep.bound_ok);
    for (std::size_t k = 0; k < rep.mi.size(); ++k)
      CHECK(rep.mi[k] <= rep.bound_terms[k] + kCrossTol);
  }
}

TEST_CASE("audits also hold under an arbitrary measurement bank") {
  Rng rng(131);
  const BitEnsemble ens(QueryMatrix::hadamard(2), {1, 2, 3});
  for (int trial = 0; trial < 50; ++trial) {
    const auto enc = random_instances::random_encoding(4, 3, true, true, rng);
    const auto meas = random_instances::random_measurements(3, 3, rng);
    const infocausality::ICReport rep = infocausality::ic_audit(ens, enc, meas);
    for (std::size_t k = 0; k < rep.mi.size(); ++k)
      CHECK(rep.mi[k] <= rep.bound_terms[k] + kCrossTol);
    CHECK(rep.mi_sum <= 1.0 + kCrossTol);
  }
}

TEST_CASE("the audited signal budget matches the bias identity") {
  Rng rng(137);
  const QueryMatrix f = QueryMatrix::hadamard(2);
  const auto enc = random_instances::random_encoding(4, 3, true, true, rng);
  const queries::BiasReport bias = queries::biases(f, enc);
  double tail = 0.0;
  for (std::size_t i = 1; i < bias.biases.size(); ++i) tail += bias.biases[i] * bias.biases[i];
  CHECK(std::abs(tail - (1.0 - bias.x_avg.squaredNorm())) <= kCrossTol);
}

TEST_CASE("ic_audit rejects mismatched or skewed inputs") {
  Rng rng(139);
  const BitEnsemble ens(QueryMatrix::hadamard(2), {1, 2});
  const auto uniform = random_instances::random_encoding(4, 2, true, true, rng);
  const auto skewed = random_instances::random_encoding(4, 2, true, false, rng);
  const auto small = random_instances::random_encoding(2, 2, true, true, rng);
  const auto meas = random_instances::random_measurements(2, 2, rng);
  CHECK_NOTHROW(infocausality::ic_audit(ens, uniform, meas));
  CHECK_THROWS_AS(infocausality::ic_audit(ens, skewed, meas), std::invalid_argument);
  CHECK_THROWS_AS(infocausality::ic_audit(ens, small, meas), std::invalid_argument);
  CHECK_THROWS_AS(infocausality::ic_audit(ens, uniform, {meas[0]}), std::invalid_argument);
}
