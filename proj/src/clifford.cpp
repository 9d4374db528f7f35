#include "hyperbits/clifford.hpp"

#include <stdexcept>
#include <string>

#include "hyperbits/errors.hpp"

namespace hyperbits::clifford {

namespace {

using qsim::CMatrix;
using qsim::Complex;

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return m;
}

}  // namespace

GammaFamily GammaFamily::generate(int d, int max_d) {
  if (d < 1) throw std::invalid_argument("GammaFamily: need d >= 1");
  if (d > max_d)
    throw ResourceLimitError("GammaFamily: d = " + std::to_string(d) + " exceeds cap " +
                             std::to_string(max_d));
  const int k = (d + 1) / 2;
  const CMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const CMatrix id = CMatrix::Identity(2, 2);

  std::vector<CMatrix> gammas;
  gammas.reserve(static_cast<std::size_t>(d));
  for (int j = 1; j <= k && static_cast<int>(gammas.size()) < d; ++j) {
    for (const CMatrix* mid : {&sx, &sy}) {
      CMatrix m = CMatrix::Identity(1, 1);
      for (int slot = 1; slot <= k; ++slot)
        m = qsim::tensor(m, slot < j ? sz : (slot == j ? *mid : id));
      gammas.push_back(std::move(m));
      if (static_cast<int>(gammas.size()) == d) break;
    }
  }

  const Eigen::Index dim = gammas.front().rows();
  const CMatrix two_id = 2.0 * CMatrix::Identity(dim, dim);
  for (int i = 0; i < d; ++i) {
    if (qsim::hermiticity_defect(gammas[static_cast<std::size_t>(i)]) > kStructuralTol)
      throw std::logic_error("GammaFamily: generator not Hermitian");
    for (int j = i; j < d; ++j) {
      const CMatrix& gi = gammas[static_cast<std::size_t>(i)];
      const CMatrix& gj = gammas[static_cast<std::size_t>(j)];
      CMatrix anti = gi * gj + gj * gi;
      if (i == j) anti -= two_id;
      if (anti.cwiseAbs().maxCoeff() > kStructuralTol)
        throw std::logic_error("GammaFamily: anticommutation relation violated");
    }
  }
  return GammaFamily(dim, std::move(gammas));
}

qsim::CMatrix GammaFamily::embed_vector(const Eigen::VectorXd& v) const {
  if (v.size() > count())
    throw std::invalid_argument("embed_vector: vector longer than the family");
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out += v(i) * gammas_[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace hyperbits::clifford
