#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "micpovm/hermitian.hpp"
#include "micpovm/random.hpp"

namespace micpovm::test {

inline HermitianOperator random_hermitian(int d, Rng& rng, double scale = 1.0) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal()) * scale;
  return HermitianOperator(ComplexMatrix(0.5 * (g + g.adjoint())));
}

// Random positive definite operator with spectrum bounded away from zero.
inline HermitianOperator random_pd(int d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  return HermitianOperator(ComplexMatrix(g * g.adjoint() + 0.5 * ComplexMatrix::Identity(d, d)));
}

// Random PSD operator of the given rank.
inline HermitianOperator random_psd_rank(int d, int rank, Rng& rng) {
  ComplexMatrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  return HermitianOperator(ComplexMatrix(g * g.adjoint()));
}

inline ComplexVector random_unit_vector(int d, Rng& rng) {
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Independent eigenvalue oracle.
inline RealVector oracle_eigenvalues(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Spin-s operators S_x, S_y, S_z in the basis |s, s-k>, k = 0..2s.
inline std::vector<ComplexMatrix> spin_matrices(int d) {
  const double s = 0.5 * (d - 1);
  ComplexMatrix sp = ComplexMatrix::Zero(d, d);  // S_+
  ComplexMatrix sz = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = s - k;
    sz(k, k) = m;
    if (k > 0) sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const ComplexMatrix sm = sp.adjoint();
  return {0.5 * (sp + sm), Complex(0.0, -0.5) * (sp - sm), sz};
}

}  // namespace micpovm::test

namespace micpovm::test {

// Generalized Gell-Mann matrices (d^2 - 1 of them), traceless and
// orthogonal with Tr[L_a L_b] = 2 delta_ab.
inline std::vector<HermitianOperator> gell_mann(int d) {
  std::vector<HermitianOperator> out;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(d, d);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      out.emplace_back(s);
      ComplexMatrix a = ComplexMatrix::Zero(d, d);
      a(j, k) = Complex(0.0, -1.0);
      a(k, j) = Complex(0.0, 1.0);
      out.emplace_back(a);
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = c;
    m(l, l) = -c * l;
    out.emplace_back(m);
  }
  return out;
}

}  // namespace micpovm::test
