#include "micpovm/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "micpovm/error.hpp"
#include "micpovm/random.hpp"

namespace micpovm {

DensityMatrix::DensityMatrix(HermitianOperator m, const Tolerances& tol) : m_(std::move(m)) {
  if (std::abs(m_.trace() - 1.0) > tol.state) {
    throw Error(ErrorKind::InvalidState, "density matrix trace is " + std::to_string(m_.trace()));
  }
  if (!is_psd(m_, tol.state)) {
    throw Error(ErrorKind::InvalidState, "density matrix is not positive semidefinite");
  }
}

ClippedState clip_to_state(const HermitianOperator& h) {
  const auto e = eig_hermitian(h);
  RealVector vals = e.eigenvalues;
  double clipped = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < 0.0) {
      clipped += -vals(i);
      vals(i) = 0.0;
    }
  }
  const double total = vals.sum();
  if (!(total > 0.0)) {
    throw Error(ErrorKind::InvalidState, "estimate has no positive spectrum to renormalize");
  }
  vals /= total;
  const ComplexMatrix m = e.eigenvectors * vals.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
  return {DensityMatrix(HermitianOperator(m)), clipped};
}

std::vector<double> probabilities(const DensityMatrix& rho, const Povm& p) {
  if (rho.dim() != p.dim) {
    throw Error(ErrorKind::DimensionMismatch, "state and POVM dimensions differ");
  }
  std::vector<double> out;
  out.reserve(p.elements.size());
  for (const auto& e : p.elements) out.push_back(hs_inner(rho.matrix(), e));
  return out;
}

std::vector<long long> sample_outcomes(std::span<const double> probs, long long shots,
                                       std::uint64_t seed, const Tolerances& tol) {
  if (shots < 1) throw Error(ErrorKind::InvalidDistribution, "shots must be >= 1");
  if (probs.empty()) throw Error(ErrorKind::InvalidDistribution, "empty distribution");
  std::vector<double> cdf(probs.size());
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs[i]) || probs[i] < -1e-12) {
      throw Error(ErrorKind::InvalidDistribution, "negative or non-finite probability");
    }
    total += std::max(0.0, probs[i]);
    cdf[i] = total;
  }
  if (std::abs(total - 1.0) > tol.distribution_sum) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
  for (double& c : cdf) c /= total;

  // Index of the last bin with positive mass, which absorbs u beyond cdf rounding.
  std::size_t last = probs.size() - 1;
  while (last > 0 && !(probs[last] > 0.0)) --last;

  Rng rng(seed);
  std::vector<long long> counts(probs.size(), 0);
  for (long long s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = it == cdf.end() ? last : static_cast<std::size_t>(it - cdf.begin());
    counts[std::min(k, last)] += 1;
  }
  return counts;
}

HermitianOperator reconstruct(std::span<const double> freqs, const Povm& p) {
  if (!p.duals) throw Error(ErrorKind::MissingDuals, "POVM has no dual elements");
  if (freqs.size() != p.duals->size()) {
    throw Error(ErrorKind::DimensionMismatch, "frequency count does not match POVM size");
  }
  ComplexMatrix acc = ComplexMatrix::Zero(p.dim, p.dim);
  for (std::size_t i = 0; i < freqs.size(); ++i) acc += freqs[i] * (*p.duals)[i].matrix();
  return HermitianOperator(ComplexMatrix(acc / static_cast<double>(p.dim)));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state dimensions differ");
  }
  const HermitianOperator root = sqrt_psd(rho.matrix());
  const RealVector ev = eig_hermitian(congruence(root, sigma.matrix())).eigenvalues;
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s += std::sqrt(std::max(0.0, ev(i)));
  return std::clamp(s * s, 0.0, 1.0);
}

double trace_distance(const HermitianOperator& a, const HermitianOperator& b) {
  const RealVector ev = eig_hermitian(a - b).eigenvalues;
  return 0.5 * ev.cwiseAbs().sum();
}

DensityMatrix random_density(int dim, std::optional<int> rank, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 1");
  const int r = rank.value_or(dim);
  if (r < 1 || r > dim) {
    throw Error(ErrorKind::InvalidRank,
                "rank must lie in [1, " + std::to_string(dim) + "], got " + std::to_string(r));
  }
  Rng rng(seed);
  ComplexMatrix g(dim, r);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < r; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(HermitianOperator(m));
}

Verdict discriminate(int outcome, const Povm& p) {
  if (p.elements.size() != 3 || p.dim != 2) {
    throw Error(ErrorKind::InvalidOutcome, "discrimination needs the three-outcome qubit POVM");
  }
  switch (outcome) {
    case 0: return Verdict::NotPlus;
    case 1: return Verdict::Plus;
    case 2: return Verdict::Inconclusive;
    default: throw Error(ErrorKind::InvalidOutcome, "outcome must be 0, 1 or 2");
  }
}

TomographyResult run_tomography(const DensityMatrix& rho, const Povm& p,
                                std::optional<long long> shots, std::uint64_t seed,
                                const Tolerances& tol) {
  if (!p.duals) throw Error(ErrorKind::MissingDuals, "POVM has no dual elements");
  auto probs = probabilities(rho, p);
  std::vector<double> freqs = probs;
  std::optional<std::vector<long long>> counts;
  if (shots) {
    counts = sample_outcomes(probs, *shots, seed, tol);
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      freqs[i] = static_cast<double>((*counts)[i]) / static_cast<double>(*shots);
    }
  }
  HermitianOperator estimate = reconstruct(freqs, p);
  const ClippedState clipped = clip_to_state(estimate);

  TomographyResult r{std::move(probs), std::move(counts), estimate};
  r.fidelity = fidelity(rho, clipped.state);
  r.trace_distance = trace_distance(estimate, rho.matrix());
  r.psd_clip = clipped.clipped;
  r.shots = shots;
  if (shots) r.seed = seed;
  return r;
}

}  // namespace micpovm
