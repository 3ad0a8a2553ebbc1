#pragma once

#include <span>
#include <vector>

#include "micpovm/hermitian.hpp"

namespace micpovm {

// A basis of d^2 Hermitian operators on C^d together with its Gram matrix
// G_nm = Tr[Q_n Q_m] and the dual basis Q^n = d sum_m (G^-1)_nm Q_m, so that
// (1/d) Tr[Q^n Q_m] = delta. Immutable once built.
//
// The duals are obtained from the real coordinate matrix M of the operators
// (G = M^T M, duals = d M^-T), which avoids squaring the conditioning.
class OperatorFrame {
 public:
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return operators_.size(); }
  const std::vector<HermitianOperator>& operators() const noexcept { return operators_; }
  const std::vector<HermitianOperator>& duals() const noexcept { return duals_; }
  const RealMatrix& gram() const noexcept { return gram_; }
  const RealMatrix& gram_inverse() const noexcept { return gram_inverse_; }
  // ||G||_F * ||G^-1||_F
  double condition_number() const noexcept { return condition_; }
  // ||M||_F * ||M^-1||_F for the coordinate matrix; this is what the
  // singularity threshold is applied to.
  double coordinate_condition() const noexcept { return coordinate_condition_; }

 private:
  friend OperatorFrame build_frame(std::vector<HermitianOperator>, const Tolerances&);
  OperatorFrame() = default;

  int dim_ = 0;
  std::vector<HermitianOperator> operators_;
  std::vector<HermitianOperator> duals_;
  RealMatrix gram_;
  RealMatrix gram_inverse_;
  double condition_ = 0.0;
  double coordinate_condition_ = 0.0;
};

// Throws DimensionMismatch for mixed dimensions and LinearlyDependent when
// the count is not d^2 or the Gram matrix is (numerically) singular.
OperatorFrame build_frame(std::vector<HermitianOperator> operators, const Tolerances& tol = {});

// Matrix of Hilbert-Schmidt products Tr[A_n A_m].
RealMatrix gram_matrix(std::span<const HermitianOperator> ops);

// Real coordinates of a Hermitian operator in an orthonormal basis of the
// Hermitian matrices (diagonal entries, then sqrt(2) Re and sqrt(2) Im of
// the upper triangle), so that Tr[A B] = a . b.
RealVector hermitian_coordinates(const HermitianOperator& a);
HermitianOperator from_hermitian_coordinates(const RealVector& x, int dim);

// d^2 x N matrix whose columns are the coordinates of `ops`.
RealMatrix coordinate_matrix(std::span<const HermitianOperator> ops);

enum class CoefficientKind {
  Contravariant,  // A^n = Tr[A Q^n], the discrete P-symbol
  Covariant,      // A_n = Tr[A Q_n], the discrete Q-symbol
};

struct CoefficientVector {
  CoefficientKind kind;
  RealVector values;
};

CoefficientVector p_coefficients(const HermitianOperator& a, const OperatorFrame& f);
CoefficientVector q_coefficients(const HermitianOperator& a, const OperatorFrame& f);

// A_n = (1/d) sum_m G_nm A^m
CoefficientVector coeff_transform(const CoefficientVector& p, const OperatorFrame& f);

// (1/d) sum_n c_n basis_n. Pair contravariant coefficients with the frame
// operators and covariant ones with the duals.
HermitianOperator expand(const CoefficientVector& c, std::span<const HermitianOperator> basis);

// True iff every row of G^-1 has an entry below -1e-12.
bool gram_inverse_row_negativity(const OperatorFrame& f);

}  // namespace micpovm
