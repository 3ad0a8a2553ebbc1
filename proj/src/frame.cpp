#include "micpovm/frame.hpp"

#include <cmath>
#include <string>

#include "micpovm/error.hpp"

namespace micpovm {

RealMatrix gram_matrix(std::span<const HermitianOperator> ops) {
  const auto n = static_cast<Eigen::Index>(ops.size());
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = hs_inner(ops[i], ops[j]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

RealVector hermitian_coordinates(const HermitianOperator& a) {
  const int d = a.dim();
  RealVector x(static_cast<Eigen::Index>(d) * d);
  Eigen::Index k = 0;
  for (int i = 0; i < d; ++i) x(k++) = a(i, i).real();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      x(k++) = std::sqrt(2.0) * a(i, j).real();
      x(k++) = std::sqrt(2.0) * a(i, j).imag();
    }
  return x;
}

HermitianOperator from_hermitian_coordinates(const RealVector& x, int dim) {
  if (x.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate vector length must be dim^2");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  Eigen::Index k = 0;
  for (int i = 0; i < dim; ++i) m(i, i) = x(k++);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Complex z(x(k), x(k + 1));
      k += 2;
      m(i, j) = z / std::sqrt(2.0);
      m(j, i) = std::conj(z) / std::sqrt(2.0);
    }
  return HermitianOperator(m);
}

RealMatrix coordinate_matrix(std::span<const HermitianOperator> ops) {
  if (ops.empty()) return RealMatrix();
  const int d = ops.front().dim();
  RealMatrix m(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].dim() != d) {
      throw Error(ErrorKind::DimensionMismatch, "operators must share one dimension");
    }
    m.col(static_cast<Eigen::Index>(i)) = hermitian_coordinates(ops[i]);
  }
  return m;
}

OperatorFrame build_frame(std::vector<HermitianOperator> operators, const Tolerances& tol) {
  if (operators.empty()) {
    throw Error(ErrorKind::LinearlyDependent, "empty operator list");
  }
  const int d = operators.front().dim();
  for (const auto& op : operators) {
    if (op.dim() != d) {
      throw Error(ErrorKind::DimensionMismatch, "frame operators must share one dimension");
    }
  }
  const auto n = static_cast<Eigen::Index>(operators.size());
  if (n != static_cast<Eigen::Index>(d) * d) {
    throw Error(ErrorKind::LinearlyDependent,
                "a frame on C^" + std::to_string(d) + " needs " + std::to_string(d * d) +
                    " operators, got " + std::to_string(n));
  }

  OperatorFrame f;
  f.dim_ = d;
  f.gram_ = gram_matrix(operators);

  const RealMatrix m = coordinate_matrix(operators);
  Eigen::PartialPivLU<RealMatrix> lu(m);
  const RealMatrix m_inv = lu.inverse();
  f.coordinate_condition_ = m.norm() * m_inv.norm();
  if (!m_inv.allFinite() || !std::isfinite(f.coordinate_condition_) ||
      f.coordinate_condition_ > tol.gram_condition_max) {
    throw Error(ErrorKind::LinearlyDependent,
                "operators are linearly dependent (condition estimate " +
                    std::to_string(f.coordinate_condition_) + ")");
  }
  // G^-1 = M^-1 M^-T is symmetric by construction.
  f.gram_inverse_ = m_inv * m_inv.transpose();
  f.condition_ = f.gram_.norm() * f.gram_inverse_.norm();

  const RealMatrix dual_coords = static_cast<double>(d) * m_inv.transpose();
  f.duals_.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    f.duals_.push_back(from_hermitian_coordinates(dual_coords.col(i), d));
  }
  f.operators_ = std::move(operators);
  return f;
}

namespace {

RealVector traces_against(const HermitianOperator& a, const std::vector<HermitianOperator>& ops) {
  RealVector v(static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) v(static_cast<Eigen::Index>(i)) = hs_inner(a, ops[i]);
  return v;
}

}  // namespace

CoefficientVector p_coefficients(const HermitianOperator& a, const OperatorFrame& f) {
  return {CoefficientKind::Contravariant, traces_against(a, f.duals())};
}

CoefficientVector q_coefficients(const HermitianOperator& a, const OperatorFrame& f) {
  return {CoefficientKind::Covariant, traces_against(a, f.operators())};
}

CoefficientVector coeff_transform(const CoefficientVector& p, const OperatorFrame& f) {
  if (p.values.size() != f.gram().rows()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector length does not match frame");
  }
  return {CoefficientKind::Covariant, (f.gram() * p.values) / static_cast<double>(f.dim())};
}

HermitianOperator expand(const CoefficientVector& c, std::span<const HermitianOperator> basis) {
  if (basis.empty() || static_cast<std::size_t>(c.values.size()) != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient count does not match basis size");
  }
  const int d = basis.front().dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].dim() != d) {
      throw Error(ErrorKind::DimensionMismatch, "basis operators must share one dimension");
    }
    acc += c.values(static_cast<Eigen::Index>(i)) * basis[i].matrix();
  }
  return HermitianOperator(ComplexMatrix(acc / static_cast<double>(d)));
}

bool gram_inverse_row_negativity(const OperatorFrame& f) {
  const RealMatrix& gi = f.gram_inverse();
  for (Eigen::Index r = 0; r < gi.rows(); ++r) {
    if (!(gi.row(r).minCoeff() < -1e-12)) return false;
  }
  return true;
}

}  // namespace micpovm
