#pragma once

#include <string_view>

namespace micpovm {

// Numerical thresholds used throughout the library. The defaults are the
// values the test-suite pins; profiles scale the verification-style ones.
struct Tolerances {
  double hermitian_symmetrize = 1e-8;   // max |H - H^dagger| accepted (relative)
  double psd = 1e-10;                   // eigenvalue clamp / PSD slack
  double pd_per_dim = 1e-10;            // strict positivity: lambda_min > pd_per_dim * d
  double jacobi_offdiag = 1e-13;        // relative off-diagonal norm at convergence
  int jacobi_max_sweeps = 100;
  double gram_condition_max = 1e12;     // frames above this are LinearlyDependent
  double coefficient_zero = 1e-10;      // |I^n| below this is DegenerateCoefficient
  double dual_negative = 1e-12;         // dual is "indefinite" if lambda_min < -this
  double normalized_bound = 1e-9;       // slack on 0 <= K <= I
  double degenerate_spread = 1e-10;     // kappa+ - kappa- below this is degenerate
  double zero_norm = 1e-12;             // Frobenius norm below this is the zero operator
  double rank = 1e-8;                   // eigenvalues above this count toward rank
  double verify = 1e-8;                 // completeness / PSD / SIC slack in verify()
  double distribution_sum = 1e-8;       // |sum p - 1| accepted by the sampler
  double state = 1e-10;                 // density matrix PSD and trace slack

  // "strict", "default" or "loose"; anything else throws MalformedInput.
  static Tolerances profile(std::string_view name);

  // Profile named by the MICPOVM_TOLERANCE_PROFILE environment variable,
  // or the defaults when it is unset.
  static Tolerances from_environment();
};

}  // namespace micpovm
