#include "hyperbits/tsirelson.hpp"

#include <stdexcept>
#include <utility>

#include "hyperbits/clifford.hpp"
#include "hyperbits/constants.hpp"

namespace hyperbits::tsirelson {

namespace {

using qsim::CMatrix;
using qsim::CVector;

Eigen::VectorXd realify(const CVector& v) {
  Eigen::VectorXd out(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(2 * i) = v(i).real();
    out(2 * i + 1) = v(i).imag();
  }
  return out;
}

// (m (x) 1_rest) psi for psi on d1 * rest
CVector apply_first(const CMatrix& m, const CVector& psi, Eigen::Index d1, Eigen::Index rest) {
  CVector out = CVector::Zero(psi.size());
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d1; ++j) {
      const qsim::Complex mij = m(i, j);
      if (mij == qsim::Complex(0, 0)) continue;
      out.segment(i * rest, rest) += mij * psi.segment(j * rest, rest);
    }
  return out;
}

// (1_d1 (x) m (x) 1_d3) psi for psi on d1 * d2 * d3
CVector apply_middle(const CMatrix& m, const CVector& psi, Eigen::Index d1, Eigen::Index d2,
                     Eigen::Index d3) {
  CVector out = CVector::Zero(psi.size());
  for (Eigen::Index a = 0; a < d1; ++a) {
    const Eigen::Index base = a * d2 * d3;
    for (Eigen::Index i = 0; i < d2; ++i)
      for (Eigen::Index j = 0; j < d2; ++j) {
        const qsim::Complex mij = m(i, j);
        if (mij == qsim::Complex(0, 0)) continue;
        out.segment(base + i * d3, d3) += mij * psi.segment(base + j * d3, d3);
      }
  }
  return out;
}

}  // namespace

QuantumStrategy::QuantumStrategy(qsim::DensityMatrix rho_in, Eigen::Index dim_a_in,
                                 Eigen::Index dim_b_in, std::vector<qsim::Observable> alice_in,
                                 std::vector<qsim::Observable> bob_in)
    : rho(std::move(rho_in)),
      dim_a(dim_a_in),
      dim_b(dim_b_in),
      alice(std::move(alice_in)),
      bob(std::move(bob_in)) {
  if (dim_a < 1 || dim_b < 1 || rho.dim() != dim_a * dim_b)
    throw std::invalid_argument("QuantumStrategy: rho must live on dim_a * dim_b");
  for (const auto& a : alice)
    if (a.dim() != dim_a) throw std::invalid_argument("QuantumStrategy: alice dimension mismatch");
  for (const auto& b : bob)
    if (b.dim() != dim_b) throw std::invalid_argument("QuantumStrategy: bob dimension mismatch");
}

VectorStrategy::VectorStrategy(std::vector<Eigen::VectorXd> xs_in, std::vector<Eigen::VectorXd> ys_in)
    : xs(std::move(xs_in)), ys(std::move(ys_in)) {
  Eigen::Index d = 0;
  for (const auto& v : xs) d = std::max(d, v.size());
  for (const auto& v : ys) d = std::max(d, v.size());
  if (d == 0) throw std::invalid_argument("VectorStrategy: need at least one nonempty vector");
  auto fix = [d](std::vector<Eigen::VectorXd>& family) {
    for (auto& v : family) {
      if (v.norm() > 1.0 + kStructuralTol)
        throw std::invalid_argument("VectorStrategy: vector norm exceeds 1 beyond 1e-10");
      if (v.size() < d) {
        Eigen::VectorXd padded = Eigen::VectorXd::Zero(d);
        padded.head(v.size()) = v;
        v = std::move(padded);
      }
    }
  };
  fix(xs);
  fix(ys);
}

Eigen::Index VectorStrategy::dim() const {
  Eigen::Index d = 0;
  for (const auto& v : xs) d = std::max(d, v.size());
  for (const auto& v : ys) d = std::max(d, v.size());
  return d;
}

double correlation(const QuantumStrategy& qs, std::size_t k, std::size_t m) {
  const CMatrix op = qsim::tensor(qs.alice.at(k).matrix(), qs.bob.at(m).matrix());
  return qsim::real_trace_product(op, qs.rho.matrix());
}

QuantumStrategy embed(const VectorStrategy& vs) {
  const Eigen::Index d = vs.dim();
  const auto fam = clifford::GammaFamily::generate(static_cast<int>(d));
  const Eigen::Index dim = fam.dim();

  const CVector phi = qsim::maximally_entangled(dim);
  qsim::DensityMatrix rho(phi * phi.adjoint());

  std::vector<qsim::Observable> alice, bob;
  alice.reserve(vs.xs.size());
  bob.reserve(vs.ys.size());
  for (const auto& x : vs.xs) alice.emplace_back(fam.embed_vector(x));
  for (const auto& y : vs.ys) bob.emplace_back(fam.embed_vector(y).transpose());
  return QuantumStrategy(std::move(rho), dim, dim, std::move(alice), std::move(bob));
}

VectorStrategy extract(const QuantumStrategy& qs) {
  const CVector psi = qsim::purify(qs.rho);
  const Eigen::Index rank = psi.size() / qs.rho.dim();

  std::vector<Eigen::VectorXd> xs, ys;
  xs.reserve(qs.alice.size() + 1);
  ys.reserve(qs.bob.size() + 1);
  xs.push_back(realify(psi));
  ys.push_back(realify(psi));
  for (const auto& a : qs.alice)
    xs.push_back(realify(apply_first(a.matrix(), psi, qs.dim_a, qs.dim_b * rank)));
  for (const auto& b : qs.bob)
    ys.push_back(realify(apply_middle(b.matrix(), psi, qs.dim_a, qs.dim_b, rank)));
  return VectorStrategy(std::move(xs), std::move(ys));
}

}  // namespace hyperbits::tsirelson
