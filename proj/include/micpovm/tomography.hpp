#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "micpovm/hermitian.hpp"
#include "micpovm/povm.hpp"

namespace micpovm {

// Positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator m, const Tolerances& tol = {});

  int dim() const noexcept { return m_.dim(); }
  const HermitianOperator& matrix() const noexcept { return m_; }

 private:
  HermitianOperator m_;
};

// Result of clipping a Hermitian estimate back to a state.
struct ClippedState {
  DensityMatrix state;
  double clipped = 0.0;  // sum of |negative eigenvalues| removed
};

// Negative eigenvalues set to zero, then trace-normalized.
ClippedState clip_to_state(const HermitianOperator& h);

// p_n = Tr[rho E_n]
std::vector<double> probabilities(const DensityMatrix& rho, const Povm& p);

// Multinomial counts by inverse-CDF sampling, one uniform per shot.
std::vector<long long> sample_outcomes(std::span<const double> probs, long long shots,
                                       std::uint64_t seed, const Tolerances& tol = {});

// (1/d) sum_n freqs_n E^n; not projected onto states.
HermitianOperator reconstruct(std::span<const double> freqs, const Povm& p);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// (1/2) ||A - B||_1
double trace_distance(const HermitianOperator& a, const HermitianOperator& b);

// G G^dagger / Tr[G G^dagger] with G a d x rank complex Gaussian matrix.
DensityMatrix random_density(int dim, std::optional<int> rank, std::uint64_t seed);

enum class Verdict {
  NotPlus,       // outcome 0: the state was (|-> + |+>)/sqrt(2)
  Plus,          // outcome 1: the state was |+>
  Inconclusive,  // outcome 2
};

// Interprets a 0-based outcome of preset_discrimination().
Verdict discriminate(int outcome, const Povm& p);

struct TomographyResult {
  std::vector<double> probabilities;
  std::optional<std::vector<long long>> counts;
  HermitianOperator reconstructed;
  double fidelity = 0.0;
  double trace_distance = 0.0;
  double psd_clip = 0.0;
  std::optional<long long> shots = std::nullopt;  // empty for exact probabilities
  std::optional<std::uint64_t> seed = std::nullopt;
};

// probabilities -> optional sampling -> reconstruct -> diagnostics.
TomographyResult run_tomography(const DensityMatrix& rho, const Povm& p,
                                std::optional<long long> shots, std::uint64_t seed,
                                const Tolerances& tol = {});

}  // namespace micpovm
