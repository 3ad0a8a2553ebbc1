#include "micpovm/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "micpovm/error.hpp"

namespace micpovm {

namespace {

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

HermitianOperator spectral_map(const EigenDecomposition& e, const RealVector& values) {
  const ComplexMatrix& v = e.eigenvectors;
  ComplexMatrix m = v * values.cast<Complex>().asDiagonal() * v.adjoint();
  return HermitianOperator(m);
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "Hermitian operator must be square with dim >= 1");
  }
  const ComplexMatrix adj = m.adjoint();
  const double asym = (m - adj).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, m.norm());
  if (!std::isfinite(asym) || asym > tol.hermitian_symmetrize * scale) {
    throw Error(ErrorKind::NotHermitian,
                "matrix deviates from Hermitian by " + std::to_string(asym));
  }
  m_ = 0.5 * (m + adj);
  for (Eigen::Index i = 0; i < m_.rows(); ++i) m_(i, i) = Complex(m_(i, i).real(), 0.0);
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::outer(const ComplexVector& v) {
  return HermitianOperator(v * v.adjoint());
}

HermitianOperator HermitianOperator::from_real(const RealMatrix& m, const Tolerances& tol) {
  return HermitianOperator(m.cast<Complex>(), tol);
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  require_same_dim(*this, other);
  m_ += other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  require_same_dim(*this, other);
  m_ -= other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

EigenDecomposition eig_hermitian(const HermitianOperator& h, const Tolerances& tol) {
  const int n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double threshold = tol.jacobi_offdiag * a.norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };

  int sweep = 0;
  for (;; ++sweep) {
    if (off_norm() <= threshold) break;
    if (sweep >= tol.jacobi_max_sweeps) {
      throw Error(ErrorKind::NumericalError,
                  "Jacobi eigensolver did not converge in " +
                      std::to_string(tol.jacobi_max_sweeps) + " sweeps");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const Complex phase = apq / b;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Real Jacobi rotation for [[app, b], [b, aqq]], preceded by the
        // diagonal phase that makes the off-diagonal element real.
        const double theta = (aqq - app) / (2.0 * b);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u00(c, 0.0);
        const Complex u01(s, 0.0);
        const Complex u10 = -s * std::conj(phase);
        const Complex u11 = c * std::conj(phase);

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u00 + akq * u10;
          a(k, q) = akp * u01 + akq * u11;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u00 + vkq * u10;
          v(k, q) = vkp * u01 + vkq * u11;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  out.sweeps = sweep;
  for (int r = 0; r < n; ++r) {
    out.eigenvalues(r) = a(order[r], order[r]).real();
    out.eigenvectors.col(r) = v.col(order[r]);
  }
  return out;
}

double min_eigenvalue(const HermitianOperator& h, const Tolerances& tol) {
  return eig_hermitian(h, tol).eigenvalues(0);
}

double max_eigenvalue(const HermitianOperator& h, const Tolerances& tol) {
  const auto e = eig_hermitian(h, tol);
  return e.eigenvalues(e.eigenvalues.size() - 1);
}

bool is_psd(const HermitianOperator& h, double tol) { return min_eigenvalue(h) >= -tol; }

int numerical_rank(const HermitianOperator& h, double threshold) {
  const auto e = eig_hermitian(h);
  return static_cast<int>((e.eigenvalues.array() > threshold).count());
}

HermitianOperator sqrt_psd(const HermitianOperator& h, const Tolerances& tol) {
  const auto e = eig_hermitian(h, tol);
  if (e.eigenvalues(0) < -tol.psd) {
    throw Error(ErrorKind::NotPositive,
                "square root of operator with eigenvalue " + std::to_string(e.eigenvalues(0)));
  }
  const RealVector roots = e.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return spectral_map(e, roots);
}

HermitianOperator inv_sqrt_pd(const HermitianOperator& h, const Tolerances& tol) {
  const auto e = eig_hermitian(h, tol);
  if (e.eigenvalues(0) <= tol.pd_per_dim * h.dim()) {
    throw Error(ErrorKind::NotStrictlyPositive,
                "inverse square root needs a positive definite operator, lambda_min = " +
                    std::to_string(e.eigenvalues(0)));
  }
  const RealVector inv_roots = e.eigenvalues.cwiseSqrt().cwiseInverse();
  return spectral_map(e, inv_roots);
}

HermitianOperator congruence(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b);
  return HermitianOperator(ComplexMatrix(a.matrix() * b.matrix() * a.matrix()));
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b);
  return a.matrix().cwiseProduct(b.matrix().transpose()).sum().real();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double frobenius_norm(const HermitianOperator& a) { return a.matrix().norm(); }

HermitianOperator pauli(int axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case 0: m << 0.0, 1.0, 1.0, 0.0; break;
    case 1: m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0; break;
    case 2: m << 1.0, 0.0, 0.0, -1.0; break;
    default: throw Error(ErrorKind::DimensionMismatch, "Pauli axis must be 0, 1 or 2");
  }
  return HermitianOperator(m);
}

}  // namespace micpovm
