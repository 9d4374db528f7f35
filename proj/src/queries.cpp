#include "hyperbits/queries.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperbits/constants.hpp"
#include "hyperbits/errors.hpp"

namespace hyperbits::queries {

namespace {

int exponent_of(Eigen::Index size) {
  if (size < 1) throw std::invalid_argument("QueryMatrix: matrix must be nonempty");
  int n = 0;
  Eigen::Index s = size;
  while (s > 1) {
    if (s % 2 != 0) throw std::invalid_argument("QueryMatrix: size must be a power of two");
    s /= 2;
    ++n;
  }
  return n;
}

}  // namespace

QueryMatrix::QueryMatrix(Eigen::MatrixXi entries) : f_(std::move(entries)) {
  if (f_.rows() != f_.cols()) throw std::invalid_argument("QueryMatrix: must be square");
  n_ = exponent_of(f_.rows());
  if (n_ > kMaxHadamardN)
    throw ResourceLimitError("QueryMatrix: size exceeds 2^" + std::to_string(kMaxHadamardN));
  const Eigen::Index s = f_.rows();
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      if (f_(i, j) != 1 && f_(i, j) != -1)
        throw std::invalid_argument("QueryMatrix: entries must be +-1");
  const Eigen::MatrixXi expected = static_cast<int>(s) * Eigen::MatrixXi::Identity(s, s);
  if (((f_ * f_.transpose()) - expected).cwiseAbs().maxCoeff() != 0)
    throw std::invalid_argument("QueryMatrix: rows are not pairwise orthogonal");
  if (((f_.transpose() * f_) - expected).cwiseAbs().maxCoeff() != 0)
    throw std::invalid_argument("QueryMatrix: columns are not pairwise orthogonal");
}

QueryMatrix QueryMatrix::hadamard(int n) {
  if (n < 0) throw std::invalid_argument("hadamard: n must be nonnegative");
  if (n > kMaxHadamardN)
    throw ResourceLimitError("hadamard: n exceeds " + std::to_string(kMaxHadamardN));
  const Eigen::Index s = Eigen::Index(1) << n;
  Eigen::MatrixXi f(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      f(i, j) = std::popcount(static_cast<unsigned long long>(i & j)) % 2 == 0 ? 1 : -1;
  return QueryMatrix(std::move(f));
}

EncodingScheme::EncodingScheme(std::vector<double> priors,
                               std::vector<hyperball::HyperbitState> hyperbits)
    : priors_(std::move(priors)) {
  if (priors_.empty() || priors_.size() != hyperbits.size())
    throw std::invalid_argument("EncodingScheme: need one prior per hyperbit");
  double sum = 0.0;
  for (double p : priors_) {
    if (p < 0.0) throw std::invalid_argument("EncodingScheme: priors must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTightTol)
    throw std::invalid_argument("EncodingScheme: priors must sum to 1");
  Eigen::Index dim = 0;
  for (const auto& h : hyperbits) dim = std::max(dim, h.dim());
  hyperbits_.reserve(hyperbits.size());
  for (const auto& h : hyperbits) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v.head(h.dim()) = h.coords();
    hyperbits_.emplace_back(std::move(v));
  }
}

EncodingScheme pad_inputs(const EncodingScheme& enc, std::size_t target_size) {
  if (target_size < enc.size())
    throw std::invalid_argument("pad_inputs: target smaller than the scheme");
  std::vector<double> priors = enc.priors();
  std::vector<hyperball::HyperbitState> hyperbits = enc.hyperbits();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(enc.dim());
  while (priors.size() < target_size) {
    priors.push_back(0.0);
    hyperbits.emplace_back(zero);
  }
  return EncodingScheme(std::move(priors), std::move(hyperbits));
}

BiasReport biases(const QueryMatrix& f, const EncodingScheme& enc) {
  const Eigen::Index s = f.size();
  if (static_cast<std::size_t>(s) != enc.size())
    throw std::invalid_argument("biases: encoding size must match the query matrix");
  const Eigen::Index dim = enc.dim();

  BiasReport rep;
  rep.x_avg = Eigen::VectorXd::Zero(dim);
  rep.rhs = 0.0;
  for (Eigen::Index j = 0; j < s; ++j) {
    const double p = enc.priors()[static_cast<std::size_t>(j)];
    const Eigen::VectorXd& h = enc.hyperbits()[static_cast<std::size_t>(j)].coords();
    rep.x_avg += p * h;
    rep.rhs += p * p * h.squaredNorm();
  }
  rep.rhs *= static_cast<double>(s);

  rep.xs.reserve(static_cast<std::size_t>(s));
  rep.biases.reserve(static_cast<std::size_t>(s));
  rep.optimal_meas.reserve(static_cast<std::size_t>(s));
  rep.degenerate.reserve(static_cast<std::size_t>(s));
  rep.lhs = 0.0;
  for (Eigen::Index i = 0; i < s; ++i) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
    double p_plus = 0.0;
    for (Eigen::Index j = 0; j < s; ++j) {
      const double p = enc.priors()[static_cast<std::size_t>(j)];
      x += f.entry(i, j) * p * enc.hyperbits()[static_cast<std::size_t>(j)].coords();
      if (f.entry(i, j) > 0) p_plus += p;
    }
    const double e = x.norm();
    rep.lhs += e * e;
    rep.degenerate.push_back(std::max(p_plus, 1.0 - p_plus) > 1.0 - kDegenerateQueryTol);
    if (e > 0.0) {
      rep.optimal_meas.emplace_back(x / e);
    } else {
      Eigen::VectorXd e1 = Eigen::VectorXd::Zero(dim);
      e1(0) = 1.0;
      rep.optimal_meas.emplace_back(std::move(e1));
    }
    rep.xs.push_back(std::move(x));
    rep.biases.push_back(e);
  }
  return rep;
}

double check_identity(const QueryMatrix& f, const EncodingScheme& enc) {
  const BiasReport rep = biases(f, enc);
  return std::abs(rep.lhs - rep.rhs);
}

double check_suboptimal(const QueryMatrix& f, const EncodingScheme& enc,
                        const std::vector<hyperball::MeasurementVector>& meas) {
  if (meas.size() != static_cast<std::size_t>(f.size()))
    throw std::invalid_argument("check_suboptimal: need one measurement per query");
  const BiasReport rep = biases(f, enc);
  double captured = 0.0;
  for (std::size_t i = 0; i < meas.size(); ++i) {
    const double t = hyperball::padded_dot(meas[i].coords(), rep.xs[i]);
    captured += t * t;
  }
  return rep.rhs - captured;
}

KoenigReport koenig_compare(const EncodingScheme& enc) {
  if (enc.size() != 4)
    throw std::invalid_argument("koenig_compare: need exactly 4 two-bit messages");
  for (double p : enc.priors())
    if (std::abs(p - 0.25) > kTightTol)
      throw std::invalid_argument("koenig_compare: priors must be uniform");
  const BiasReport rep = biases(QueryMatrix::hadamard(2), enc);
  KoenigReport out;
  out.biases = {rep.biases[2], rep.biases[1], rep.biases[3]};
  out.p_sum = 0.0;
  out.e_sq_sum = 0.0;
  for (double e : out.biases) {
    out.p_sum += 0.5 * (1.0 + e);
    out.e_sq_sum += e * e;
  }
  out.classical_bound = 1.5 * (1.0 + 1.0 / std::sqrt(3.0));
  out.within_strengthened_bound = out.e_sq_sum <= 1.0 + kCrossTol;
  return out;
}

}  // namespace hyperbits::queries
