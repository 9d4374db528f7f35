#include "hyperbits/qsim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperbits/constants.hpp"
#include "hyperbits/errors.hpp"

namespace hyperbits::qsim {

double hermiticity_defect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

void require_square(const CMatrix& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": need a nonempty square matrix");
  if (m.rows() > kMaxTotalDim)
    throw ResourceLimitError(std::string(who) + ": dimension " + std::to_string(m.rows()) +
                             " exceeds cap " + std::to_string(kMaxTotalDim));
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  if (hermiticity_defect(m_) > kStructuralTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
  const Complex tr = m_.trace();
  if (std::abs(tr.real() - 1.0) > kStructuralTol || std::abs(tr.imag()) > kStructuralTol)
    throw std::invalid_argument("DensityMatrix: trace must be 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kStructuralTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue below -1e-10");
}

Observable::Observable(CMatrix m) : m_(std::move(m)) {
  require_square(m_, "Observable");
  if (hermiticity_defect(m_) > kStructuralTol)
    throw std::invalid_argument("Observable: not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo < -1.0 - kStructuralTol || hi > 1.0 + kStructuralTol)
    throw std::invalid_argument("Observable: spectrum escapes [-1, 1] beyond 1e-10");
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("tensor: empty factor");
  if (a.rows() * b.rows() > kMaxTotalDim || a.cols() * b.cols() > kMaxTotalDim)
    throw ResourceLimitError("tensor: product dimension exceeds cap " +
                             std::to_string(kMaxTotalDim));
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix partial_trace_first(const DensityMatrix& rho, Eigen::Index dim_first) {
  const Eigen::Index total = rho.dim();
  if (dim_first <= 0 || total % dim_first != 0)
    throw std::invalid_argument("partial_trace_first: dim_first must divide the total dimension");
  const Eigen::Index d2 = total / dim_first;
  CMatrix out = CMatrix::Zero(d2, d2);
  for (Eigen::Index k = 0; k < dim_first; ++k)
    out += rho.matrix().block(k * d2, k * d2, d2, d2);
  return DensityMatrix(std::move(out));
}

double real_trace_product(const CMatrix& op, const CMatrix& rho) {
  if (op.rows() != rho.cols() || op.cols() != rho.rows())
    throw std::invalid_argument("real_trace_product: shape mismatch");
  // tr(op * rho) = sum_ij op(i,j) rho(j,i)
  return op.transpose().cwiseProduct(rho).sum().real();
}

double expectation(const DensityMatrix& rho, const Observable& obs) {
  if (rho.dim() != obs.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  const Complex tr = obs.matrix().transpose().cwiseProduct(rho.matrix()).sum();
  if (std::abs(tr.imag()) > kStructuralTol)
    throw std::runtime_error("expectation: imaginary part of trace exceeds 1e-10");
  return tr.real();
}

CVector purify(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const Eigen::VectorXd& w = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) > kRankCutoff) keep.push_back(i);
  if (keep.empty()) throw std::invalid_argument("purify: state has numerical rank 0");
  const Eigen::Index d = rho.dim();
  const Eigen::Index rank = static_cast<Eigen::Index>(keep.size());
  CVector psi = CVector::Zero(d * rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    const double amp = std::sqrt(w(keep[k]));
    for (Eigen::Index i = 0; i < d; ++i) psi(i * rank + k) = amp * es.eigenvectors()(i, keep[k]);
  }
  return psi;
}

CVector maximally_entangled(Eigen::Index dim) {
  if (dim <= 0) throw std::invalid_argument("maximally_entangled: dim must be positive");
  if (dim * dim > kMaxTotalDim)
    throw ResourceLimitError("maximally_entangled: dim^2 exceeds cap " +
                             std::to_string(kMaxTotalDim));
  CVector v = CVector::Zero(dim * dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) v(i * dim + i) = amp;
  return v;
}

}  // namespace hyperbits::qsim
