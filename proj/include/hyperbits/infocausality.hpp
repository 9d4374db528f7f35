#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hyperbits/hyperball.hpp"
#include "hyperbits/queries.hpp"

namespace hyperbits::infocausality {

// Base-2 Shannon entropy of a bit with P(1) = t; exactly 0 at the endpoints.
double binary_entropy(double t);

// Max over a uniform (resolution + 1)-point grid x in [-1, 1] of
// (1 - h((1+x)/2)) - x^2. Nonpositive analytically, so the return value is
// the worst numerical violation found.
double taylor_bound_check(int resolution);

// I(a : b) in bits for a 2x2 joint table; joint[ai][bi] with index 0 for
// outcome -1 and index 1 for outcome +1.
double mutual_information(const std::array<std::array<double, 2>, 2>& joint);

// A selection of +-1 bits a_i = f(row_i, message) over the uniform message
// register: each selected row must be balanced (uniform bit) and every pair
// exhaustively checked for independence.
class BitEnsemble {
 public:
  BitEnsemble(queries::QueryMatrix f, std::vector<std::size_t> rows);

  const queries::QueryMatrix& matrix() const { return f_; }
  const std::vector<std::size_t>& rows() const { return rows_; }
  std::size_t bit_count() const { return rows_.size(); }

 private:
  queries::QueryMatrix f_;
  std::vector<std::size_t> rows_;
};

struct ICReport {
  std::vector<double> mi;           // I(a_i : b_i), bits
  std::vector<double> bound_terms;  // <m_i, x_i>^2 / (1 - <m_i, x_avg>^2)
  double mi_sum;
  double bound_sum;
  bool ic_ok;         // mi_sum <= 1 + 1e-9
  bool dominance_ok;  // mi_sum <= bound_sum + 1e-9
  bool bound_ok;      // bound_sum <= 1 + 1e-9
};

// Exact (a_i, answer_i) joint distributions for one communicated hyperbit,
// measurement bank meas (one entry per audited bit). Uniform priors
// required; a bound term with vanishing denominator contributes 0.
ICReport ic_audit(const BitEnsemble& ens, const queries::EncodingScheme& enc,
                  const std::vector<hyperball::MeasurementVector>& meas);

// The bias-maximizing bank x_i / |x_i| restricted to the audited rows.
std::vector<hyperball::MeasurementVector> optimal_measurements(
    const BitEnsemble& ens, const queries::EncodingScheme& enc);

}  // namespace hyperbits::infocausality
