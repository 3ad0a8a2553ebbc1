#include "micpovm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "micpovm/error.hpp"

namespace micpovm {

std::string_view to_string(NormalizationMode m) noexcept {
  return m == NormalizationMode::Extremal ? "extremal" : "closed_form";
}

std::string_view to_string(FrameSide s) noexcept {
  return s == FrameSide::Primal ? "primal" : "dual";
}

NormalizationMode parse_mode(std::string_view s) {
  if (s == "extremal") return NormalizationMode::Extremal;
  if (s == "closed_form" || s == "closed-form") return NormalizationMode::ClosedForm;
  throw Error(ErrorKind::MalformedInput, "unknown normalization mode '" + std::string(s) + "'");
}

FrameSide parse_side(std::string_view s) {
  if (s == "primal") return FrameSide::Primal;
  if (s == "dual") return FrameSide::Dual;
  throw Error(ErrorKind::MalformedInput, "unknown frame side '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// verification

PovmReport verify(const Povm& p, double tol, const Tolerances& tols) {
  PovmReport r;
  r.dim = p.dim;
  r.element_count = static_cast<int>(p.elements.size());
  const int d = p.dim;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();

  const bool shapes_ok =
      d >= 1 && !p.elements.empty() &&
      std::all_of(p.elements.begin(), p.elements.end(), [d](const auto& e) { return e.dim() == d; });
  if (!shapes_ok) {
    r.completeness_residual = nan;
    r.min_element_eigenvalue = nan;
    r.gram_condition = inf;
    return r;
  }

  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  r.min_element_eigenvalue = inf;
  std::vector<double> traces;
  for (const auto& e : p.elements) {
    sum += e.matrix();
    const auto eig = eig_hermitian(e, tols);
    r.min_element_eigenvalue = std::min(r.min_element_eigenvalue, eig.eigenvalues(0));
    r.element_ranks.push_back(static_cast<int>((eig.eigenvalues.array() > tols.rank).count()));
    traces.push_back(e.trace());
  }
  r.completeness_residual = (sum - ComplexMatrix::Identity(d, d)).norm();
  r.complete = r.completeness_residual <= tol;
  r.positive = r.min_element_eigenvalue >= -tol;

  const int n = r.element_count;
  const int d2 = d * d;
  const RealMatrix g = gram_matrix(p.elements);
  r.gram_condition = inf;
  if (n >= d2) {
    // Singular values of the coordinate matrix are square roots of the
    // nonzero Gram eigenvalues.
    Eigen::JacobiSVD<RealMatrix> svd(coordinate_matrix(p.elements));
    const RealVector& s = svd.singularValues();
    const double top = s(0);
    const double low = s(d2 - 1);
    if (low > 0.0 && top > 0.0) {
      const double ratio = top / low;
      r.gram_condition = ratio * ratio;
      r.informationally_complete = ratio <= tols.gram_condition_max;
    }
  }

  if (n == d2) {
    bool rank_one = std::all_of(r.element_ranks.begin(), r.element_ranks.end(),
                                [](int k) { return k == 1; });
    double trace_spread = 0.0;
    for (double t : traces) trace_spread = std::max(trace_spread, std::abs(t - traces.front()));
    double dev = 0.0;
    const double target = 1.0 / (d + 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        dev = std::max(dev, std::abs(g(i, j) / (traces[i] * traces[j]) - target));
    if (n == 1) dev = 0.0;
    r.sic_overlap_deviation = dev;
    r.sic = rank_one && trace_spread <= tol && dev <= tol;
  }

  if (p.duals && static_cast<int>(p.duals->size()) == n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double v = hs_inner((*p.duals)[i], p.elements[j]) / d;
        worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
      }
    r.duality_residual = worst;
  }
  return r;
}

void attach_duals(Povm& p, const Tolerances& tol) {
  p.duals.reset();
  if (p.elements.size() != static_cast<std::size_t>(p.dim) * p.dim) return;
  try {
    p.duals = build_frame(p.elements, tol).duals();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::LinearlyDependent) throw;
  }
}

// ---------------------------------------------------------------------------
// constructions

Povm cfs_construct(std::vector<HermitianOperator> f, std::optional<std::vector<double>> weights,
                   const Tolerances& tol) {
  if (f.empty()) throw Error(ErrorKind::InvalidCount, "CFS construction needs operators");
  const int d = f.front().dim();
  if (weights && weights->size() != f.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight count does not match operator count");
  }
  std::vector<double> w = weights.value_or(std::vector<double>(f.size(), 1.0));
  for (double a : w) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw Error(ErrorKind::NotPositive, "CFS weights must be positive");
    }
  }

  HermitianOperator s = HermitianOperator::zero(d);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].dim() != d) throw Error(ErrorKind::DimensionMismatch, "operators must share one dimension");
    if (!is_psd(f[i], tol.psd) || frobenius_norm(f[i]) <= tol.zero_norm) {
      throw Error(ErrorKind::NotPositive,
                  "operator " + std::to_string(i) + " is not positive semidefinite and nonzero");
    }
    s += w[i] * f[i];
  }
  if (min_eigenvalue(s, tol) <= tol.pd_per_dim * d) {
    throw Error(ErrorKind::SingularSum, "weighted operator sum is not strictly positive");
  }
  const HermitianOperator root = inv_sqrt_pd(s, tol);

  Povm p;
  p.dim = d;
  p.elements.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) p.elements.push_back(w[i] * congruence(root, f[i]));
  p.meta.method = "cfs";
  p.meta.weights = std::move(w);
  attach_duals(p, tol);
  return p;
}

Povm evr_primal_construct(const OperatorFrame& f, const Tolerances& tol) {
  const int d = f.dim();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto ev = eig_hermitian(f.operators()[i], tol).eigenvalues;
    if (ev(0) < -tol.normalized_bound || ev(d - 1) > 1.0 + tol.normalized_bound) {
      throw Error(ErrorKind::NotNormalized,
                  "frame operator " + std::to_string(i) + " is not bounded by 0 and I");
    }
  }
  const RealVector coeff = p_coefficients(HermitianOperator::identity(d), f).values;
  double c = 0.0;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    if (std::abs(coeff(i)) < tol.coefficient_zero) {
      throw Error(ErrorKind::DegenerateCoefficient,
                  "identity coefficient " + std::to_string(i) + " vanishes; perturb the frame");
    }
    if (coeff(i) < 0.0) c += -coeff(i);
  }

  const HermitianOperator id = HermitianOperator::identity(d);
  Povm p;
  p.dim = d;
  p.elements.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = coeff(static_cast<Eigen::Index>(i));
    const auto& q = f.operators()[i];
    if (a > 0.0) {
      p.elements.push_back((a / (d + c)) * q);
    } else {
      p.elements.push_back((-a / (d + c)) * (id - q));
    }
  }
  p.meta.method = "evr-primal";
  p.meta.shift = c;
  attach_duals(p, tol);
  return p;
}

Povm evr_dual_construct(const OperatorFrame& f, const Tolerances& tol) {
  const int d = f.dim();
  const RealVector weight = q_coefficients(HermitianOperator::identity(d), f).values;

  std::vector<HermitianOperator> scaled;
  std::vector<double> shift(f.size(), 0.0);
  double c = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double w = weight(static_cast<Eigen::Index>(i));
    if (std::abs(w) < tol.coefficient_zero) {
      throw Error(ErrorKind::DegenerateCoefficient,
                  "identity coefficient " + std::to_string(i) + " vanishes");
    }
    scaled.push_back(w * f.duals()[i]);
    const double q = min_eigenvalue(scaled.back(), tol);
    if (q < -tol.dual_negative) {
      shift[i] = -q;
      c += -q;
    }
  }

  const HermitianOperator id = HermitianOperator::identity(d);
  Povm p;
  p.dim = d;
  p.elements.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    p.elements.push_back((1.0 / (d + c)) * (scaled[i] + shift[i] * id));
  }
  p.meta.method = "evr-dual";
  p.meta.shift = c;
  attach_duals(p, tol);
  return p;
}

std::vector<HermitianOperator> normalize_extremal(std::span<const HermitianOperator> k,
                                                  const Tolerances& tol) {
  std::vector<HermitianOperator> out;
  out.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const int d = k[i].dim();
    const auto ev = eig_hermitian(k[i], tol).eigenvalues;
    const double lo = ev(0);
    const double hi = ev(d - 1);
    if (hi - lo < tol.degenerate_spread) {
      throw Error(ErrorKind::DegenerateOperator,
                  "operator " + std::to_string(i) + " is a multiple of the identity");
    }
    out.push_back((1.0 / (hi - lo)) * (k[i] - lo * HermitianOperator::identity(d)));
  }
  return out;
}

std::vector<HermitianOperator> normalize_closed_form(std::span<const HermitianOperator> k,
                                                     const Tolerances& tol) {
  std::vector<HermitianOperator> out;
  out.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double norm = frobenius_norm(k[i]);
    if (norm <= tol.zero_norm) {
      throw Error(ErrorKind::DegenerateOperator, "operator " + std::to_string(i) + " is zero");
    }
    out.push_back((0.5 / norm) * (k[i] + norm * HermitianOperator::identity(k[i].dim())));
  }
  return out;
}

Povm general_construct(std::vector<HermitianOperator> k, NormalizationMode mode, FrameSide side,
                       const Tolerances& tol) {
  if (k.empty()) throw Error(ErrorKind::LinearlyDependent, "empty operator list");
  const auto d = static_cast<std::size_t>(k.front().dim());
  if (k.size() != d * d) {
    throw Error(ErrorKind::LinearlyDependent,
                "need exactly " + std::to_string(d * d) + " operators, got " + std::to_string(k.size()));
  }
  auto normalized = mode == NormalizationMode::Extremal ? normalize_extremal(k, tol)
                                                        : normalize_closed_form(k, tol);
  const OperatorFrame frame = build_frame(std::move(normalized), tol);
  Povm p = side == FrameSide::Primal ? evr_primal_construct(frame, tol)
                                     : evr_dual_construct(frame, tol);
  p.meta.method = "general";
  p.meta.mode = std::string(to_string(mode));
  p.meta.side = std::string(to_string(side));
  return p;
}

OperatorFrame coherent_frame(std::span<const Direction> directions, int dim, const Tolerances& tol) {
  return build_frame(coherent_projectors(directions, dim), tol);
}

// ---------------------------------------------------------------------------
// qubit presets

std::array<Direction, 4> tetrahedral_directions() {
  const double r2 = std::sqrt(2.0);
  const double r6 = std::sqrt(6.0);
  return {Direction(0.0, 0.0, 1.0), Direction(2.0 * r2 / 3.0, 0.0, -1.0 / 3.0),
          Direction(-r2 / 3.0, r6 / 3.0, -1.0 / 3.0), Direction(-r2 / 3.0, -r6 / 3.0, -1.0 / 3.0)};
}

Povm preset_tetrahedral() {
  const auto dirs = tetrahedral_directions();
  Povm p;
  p.dim = 2;
  for (const auto& n : dirs) {
    HermitianOperator e = HermitianOperator::identity(2);
    for (int axis = 0; axis < 3; ++axis) e += n.components()[axis] * pauli(axis);
    p.elements.push_back(0.25 * e);
  }
  p.meta.method = "tetrahedral";
  p.meta.directions = std::vector<Direction>(dirs.begin(), dirs.end());
  attach_duals(p);
  return p;
}

namespace {

using Vec3 = Eigen::Vector3d;

Vec3 as_vec(const Direction& n) { return {n.x(), n.y(), n.z()}; }

}  // namespace

std::array<double, 4> identity_coefficients_f_vector(std::span<const Direction, 4> directions) {
  std::array<double, 4> out{};
  for (int n = 0; n < 4; ++n) {
    const Vec3 a = as_vec(directions[(n + 1) % 4]);
    const Vec3 b = as_vec(directions[(n + 2) % 4]);
    const Vec3 c = as_vec(directions[(n + 3) % 4]);
    const double triple = a.cross(b).dot(c);
    if (std::abs(triple) < 1e-12) {
      throw Error(ErrorKind::LinearlyDependent, "three of the directions are coplanar with the origin");
    }
    const Vec3 f = -(a.cross(b) + b.cross(c) + c.cross(a)) / triple;
    out[n] = 4.0 / (1.0 + f.dot(as_vec(directions[n])));
  }
  return out;
}

std::array<Direction, 4> generic_qubit_directions(const Direction& n1, const Direction& n2,
                                                  const Direction& n3) {
  const Vec3 s = (as_vec(n1) + as_vec(n2) + as_vec(n3)) / std::sqrt(3.0);
  return {n1, n2, n3, Direction(s.x(), s.y(), s.z())};
}

Povm preset_generic_qubit(const Direction& n1, const Direction& n2, const Direction& n3) {
  if (std::abs(n1.dot(n2)) > 1e-10 || std::abs(n2.dot(n3)) > 1e-10 || std::abs(n1.dot(n3)) > 1e-10) {
    throw Error(ErrorKind::NotOrthogonal, "generic qubit preset needs pairwise orthogonal directions");
  }
  const auto dirs = generic_qubit_directions(n1, n2, n3);
  const OperatorFrame frame = coherent_frame(dirs, 2);
  const RealVector gram_route = p_coefficients(HermitianOperator::identity(2), frame).values;
  const auto f_route = identity_coefficients_f_vector(dirs);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(gram_route(i) - f_route[i]) > 1e-8) {
      throw Error(ErrorKind::NumericalError,
                  "identity coefficients disagree between Gram and f-vector routes");
    }
  }
  Povm p = evr_primal_construct(frame);
  p.meta.method = "generic-qubit";
  p.meta.directions = std::vector<Direction>(dirs.begin(), dirs.end());
  return p;
}

Povm preset_discrimination() {
  const double c = std::sqrt(2.0) / (1.0 + std::sqrt(2.0));
  ComplexVector minus(2);
  minus << 0.0, 1.0;
  ComplexVector diff(2);  // (|-> - |+>) / sqrt(2)
  diff << -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);

  Povm p;
  p.dim = 2;
  p.elements.push_back(c * HermitianOperator::outer(minus));
  p.elements.push_back(c * HermitianOperator::outer(diff));
  p.elements.push_back(HermitianOperator::identity(2) - p.elements[0] - p.elements[1]);
  p.meta.method = "discrimination";
  return p;
}

}  // namespace micpovm
