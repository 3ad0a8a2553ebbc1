#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "micpovm/tolerances.hpp"

namespace micpovm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Dense d x d Hermitian matrix. Construction symmetrizes H <- (H + H^dagger)/2
// and rejects input whose asymmetry exceeds the configured tolerance.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m, const Tolerances& tol = {});

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);
  // |v><v| for an arbitrary (not necessarily normalized) vector.
  static HermitianOperator outer(const ComplexVector& v);
  static HermitianOperator from_real(const RealMatrix& m, const Tolerances& tol = {});

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double s);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    return a += b;
  }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) {
    return a -= b;
  }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }

 private:
  ComplexMatrix m_;
};

// Eigenpairs of a Hermitian operator, eigenvalues ascending, eigenvectors
// stored as the columns of a unitary matrix.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
  int sweeps = 0;
};

// Cyclic complex Jacobi rotations. Throws NumericalError if the sweep cap is hit.
EigenDecomposition eig_hermitian(const HermitianOperator& h, const Tolerances& tol = {});

double min_eigenvalue(const HermitianOperator& h, const Tolerances& tol = {});
double max_eigenvalue(const HermitianOperator& h, const Tolerances& tol = {});

bool is_psd(const HermitianOperator& h, double tol);

// Number of eigenvalues strictly above `threshold`.
int numerical_rank(const HermitianOperator& h, double threshold);

// Principal square root of a PSD operator. Eigenvalues in [-tol.psd, 0) are
// treated as zero; anything lower throws NotPositive.
HermitianOperator sqrt_psd(const HermitianOperator& h, const Tolerances& tol = {});

// H^{-1/2} for strictly positive H (lambda_min > tol.pd_per_dim * d), else
// NotStrictlyPositive.
HermitianOperator inv_sqrt_pd(const HermitianOperator& h, const Tolerances& tol = {});

// A * B * A, which is Hermitian whenever A and B are.
HermitianOperator congruence(const HermitianOperator& a, const HermitianOperator& b);

// Tr[A B], throws DimensionMismatch.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_norm(const HermitianOperator& a);

// Pauli matrices; axis 0, 1, 2 for x, y, z.
HermitianOperator pauli(int axis);

}  // namespace micpovm
