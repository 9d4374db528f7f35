#include "hyperbits/infocausality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperbits/constants.hpp"

namespace hyperbits::infocausality {

namespace {

double plogp(double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); }

}  // namespace

double binary_entropy(double t) {
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  if (t == 0.0 || t == 1.0) return 0.0;
  return plogp(t) + plogp(1.0 - t);
}

double taylor_bound_check(int resolution) {
  if (resolution < 1)
    throw std::invalid_argument("taylor_bound_check: resolution must be positive");
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= resolution; ++k) {
    const double x = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(resolution);
    const double v = (1.0 - binary_entropy(0.5 * (1.0 + x))) - x * x;
    worst = std::max(worst, v);
  }
  return worst;
}

double mutual_information(const std::array<std::array<double, 2>, 2>& joint) {
  double sum = 0.0;
  for (const auto& row : joint)
    for (double p : row) {
      if (p < -1e-15 || p > 1.0 + kTightTol)
        throw std::invalid_argument("mutual_information: entry outside [0, 1]");
      sum += p;
    }
  if (std::abs(sum - 1.0) > kTightTol)
    throw std::invalid_argument("mutual_information: table must sum to 1");
  const double pa = std::clamp(joint[1][0] + joint[1][1], 0.0, 1.0);
  const double pb = std::clamp(joint[0][1] + joint[1][1], 0.0, 1.0);
  double h_joint = 0.0;
  for (const auto& row : joint)
    for (double p : row) h_joint += plogp(std::max(0.0, p));
  return binary_entropy(pa) + binary_entropy(pb) - h_joint;
}

BitEnsemble::BitEnsemble(queries::QueryMatrix f, std::vector<std::size_t> rows)
    : f_(std::move(f)), rows_(std::move(rows)) {
  const Eigen::Index s = f_.size();
  if (rows_.empty()) throw std::invalid_argument("BitEnsemble: need at least one row");
  if (rows_.size() > static_cast<std::size_t>(s - 1))
    throw std::invalid_argument("BitEnsemble: at most 2^n - 1 pairwise independent bits");
  for (std::size_t r : rows_) {
    if (r >= static_cast<std::size_t>(s))
      throw std::invalid_argument("BitEnsemble: row index out of range");
    int balance = 0;
    for (Eigen::Index j = 0; j < s; ++j) balance += f_.entry(static_cast<Eigen::Index>(r), j);
    if (balance != 0)
      throw std::invalid_argument("BitEnsemble: row " + std::to_string(r) +
                                  " does not define a uniform bit");
  }
  for (std::size_t a = 0; a + 1 < rows_.size(); ++a)
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      int counts[2][2] = {{0, 0}, {0, 0}};
      for (Eigen::Index j = 0; j < s; ++j)
        ++counts[f_.entry(static_cast<Eigen::Index>(rows_[a]), j) > 0]
                [f_.entry(static_cast<Eigen::Index>(rows_[b]), j) > 0];
      const int quarter = static_cast<int>(s) / 4;
      if (counts[0][0] != quarter || counts[0][1] != quarter || counts[1][0] != quarter ||
          counts[1][1] != quarter)
        throw std::invalid_argument("BitEnsemble: rows " + std::to_string(rows_[a]) + " and " +
                                    std::to_string(rows_[b]) + " are not independent");
    }
}

ICReport ic_audit(const BitEnsemble& ens, const queries::EncodingScheme& enc,
                  const std::vector<hyperball::MeasurementVector>& meas) {
  const Eigen::Index s = ens.matrix().size();
  if (static_cast<std::size_t>(s) != enc.size())
    throw std::invalid_argument("ic_audit: encoding size must match the message register");
  if (meas.size() != ens.bit_count())
    throw std::invalid_argument("ic_audit: need one measurement per audited bit");
  const double uniform = 1.0 / static_cast<double>(s);
  for (double p : enc.priors())
    if (std::abs(p - uniform) > kTightTol)
      throw std::invalid_argument("ic_audit: priors must be uniform");

  Eigen::VectorXd x_avg = Eigen::VectorXd::Zero(enc.dim());
  for (Eigen::Index j = 0; j < s; ++j)
    x_avg += uniform * enc.hyperbits()[static_cast<std::size_t>(j)].coords();

  ICReport rep;
  rep.mi.reserve(ens.bit_count());
  rep.bound_terms.reserve(ens.bit_count());
  rep.mi_sum = 0.0;
  rep.bound_sum = 0.0;
  for (std::size_t k = 0; k < ens.bit_count(); ++k) {
    const Eigen::Index row = static_cast<Eigen::Index>(ens.rows()[k]);
    const Eigen::VectorXd& m = meas[k].coords();

    std::array<std::array<double, 2>, 2> joint{{{0.0, 0.0}, {0.0, 0.0}}};
    Eigen::VectorXd x_i = Eigen::VectorXd::Zero(enc.dim());
    for (Eigen::Index j = 0; j < s; ++j) {
      const int alpha = ens.matrix().entry(row, j);
      const Eigen::VectorXd& h = enc.hyperbits()[static_cast<std::size_t>(j)].coords();
      x_i += alpha * uniform * h;
      const double t = hyperball::padded_dot(m, h);
      for (int bi = 0; bi < 2; ++bi) {
        const double beta = bi == 0 ? -1.0 : 1.0;
        const double p = uniform * 0.5 * (1.0 + beta * t);
        if (p < -kTightTol)
          throw std::invalid_argument("ic_audit: negative branch probability");
        joint[alpha > 0][static_cast<std::size_t>(bi)] += std::max(0.0, p);
      }
    }
    const double i_val = mutual_information(joint);
    const double proj = hyperball::padded_dot(m, x_i);
    const double avg_proj = hyperball::padded_dot(m, x_avg);
    const double denom = 1.0 - avg_proj * avg_proj;
    const double bound = denom < kTightTol ? 0.0 : proj * proj / denom;
    rep.mi.push_back(i_val);
    rep.bound_terms.push_back(bound);
    rep.mi_sum += i_val;
    rep.bound_sum += bound;
  }
  rep.ic_ok = rep.mi_sum <= 1.0 + kCrossTol;
  rep.dominance_ok = rep.mi_sum <= rep.bound_sum + kCrossTol;
  rep.bound_ok = rep.bound_sum <= 1.0 + kCrossTol;
  return rep;
}

std::vector<hyperball::MeasurementVector> optimal_measurements(
    const BitEnsemble& ens, const queries::EncodingScheme& enc) {
  const queries::BiasReport rep = queries::biases(ens.matrix(), enc);
  std::vector<hyperball::MeasurementVector> out;
  out.reserve(ens.bit_count());
  for (std::size_t r : ens.rows()) out.push_back(rep.optimal_meas[r]);
  return out;
}

}  // namespace hyperbits::infocausality
