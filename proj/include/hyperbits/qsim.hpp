#pragma once

#include <Eigen/Dense>
#include <complex>

namespace hyperbits::qsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// max-entry deviation from M = M^dagger (0 for empty matrices)
double hermiticity_defect(const CMatrix& m);

// Trace-one positive-semidefinite Hermitian matrix. Validated at
// construction: hermiticity and unit trace within 1e-10, smallest eigenvalue
// >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

// Hermitian matrix with spectrum in [-1, 1] (tolerance 1e-10): the
// expectation observable of a two-outcome +-1 measurement.
class Observable {
 public:
  explicit Observable(CMatrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

// Kronecker product, row-major block convention:
// out((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2)
CMatrix tensor(const CMatrix& a, const CMatrix& b);

// Trace out the leading factor of a state on dim_first x (dim/dim_first).
DensityMatrix partial_trace_first(const DensityMatrix& rho, Eigen::Index dim_first);

// Re tr(op * rho), computed entrywise in O(dim^2).
double real_trace_product(const CMatrix& op, const CMatrix& rho);

// tr(obs * rho); throws if the imaginary part of the trace exceeds 1e-10.
double expectation(const DensityMatrix& rho, const Observable& obs);

// Column vector psi on dim * rank with tr_ancilla |psi><psi| = rho. The
// ancilla index runs fastest; rank counts eigenvalues above 1e-12.
CVector purify(const DensityMatrix& rho);

// (1/sqrt(dim)) sum_i |ii> on dim * dim.
CVector maximally_entangled(Eigen::Index dim);

}  // namespace hyperbits::qsim
