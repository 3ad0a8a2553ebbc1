#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "micpovm/coherent.hpp"
#include "micpovm/frame.hpp"
#include "micpovm/hermitian.hpp"

namespace micpovm {

enum class NormalizationMode { Extremal, ClosedForm };
enum class FrameSide { Primal, Dual };

std::string_view to_string(NormalizationMode m) noexcept;
std::string_view to_string(FrameSide s) noexcept;
NormalizationMode parse_mode(std::string_view s);
FrameSide parse_side(std::string_view s);

struct PovmMeta {
  std::string method;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<Direction>> directions;
  std::optional<double> shift;  // C (primal) or C-tilde (dual)
  std::optional<std::string> mode;
  std::optional<std::string> side;
  std::optional<std::vector<double>> weights;
};

struct Povm {
  int dim = 0;
  std::vector<HermitianOperator> elements;
  // Dual elements E^n with (1/d) Tr[E^n E_m] = delta, present for MIC-POVMs.
  std::optional<std::vector<HermitianOperator>> duals;
  PovmMeta meta;
};

struct PovmReport {
  int dim = 0;
  int element_count = 0;
  double completeness_residual = 0.0;
  double min_element_eigenvalue = 0.0;
  // lambda_max / lambda_{d^2} of the element Gram matrix; +inf if it has
  // fewer than d^2 significant eigenvalues.
  double gram_condition = 0.0;
  bool complete = false;
  bool positive = false;
  bool informationally_complete = false;
  bool sic = false;
  std::vector<int> element_ranks;
  std::optional<double> sic_overlap_deviation;
  std::optional<double> duality_residual;
};

// Never throws on a well-formed Povm; failures are report fields.
PovmReport verify(const Povm& p, double tol, const Tolerances& tols = {});

// Computes and stores duals when the elements form a basis; leaves them
// empty otherwise.
void attach_duals(Povm& p, const Tolerances& tol = {});

// E_a = w_a S^{-1/2} F_a S^{-1/2} with S = sum_a w_a F_a (weights default to 1).
Povm cfs_construct(std::vector<HermitianOperator> f,
                   std::optional<std::vector<double>> weights = std::nullopt,
                   const Tolerances& tol = {});

// Rescales the frame operators by their identity coefficients I^n = Tr[Q^n];
// operators with I^n < 0 are replaced by (I - Q_n), and everything is
// divided by d + C with C = sum |I^n| over the negative group.
Povm evr_primal_construct(const OperatorFrame& f, const Tolerances& tol = {});

// Builds the POVM from the weighted duals I_n Q^n (I_n = Tr[Q_n], which is 1
// for projector frames). Indefinite ones are shifted by |lambda_min| I and
// everything is divided by d + C-tilde.
Povm evr_dual_construct(const OperatorFrame& f, const Tolerances& tol = {});

// K = (k - k_min I) / (k_max - k_min)
std::vector<HermitianOperator> normalize_extremal(std::span<const HermitianOperator> k,
                                                  const Tolerances& tol = {});
// K = (k + ||k||_F I) / (2 ||k||_F), no eigensolver involved.
std::vector<HermitianOperator> normalize_closed_form(std::span<const HermitianOperator> k,
                                                     const Tolerances& tol = {});

Povm general_construct(std::vector<HermitianOperator> k, NormalizationMode mode, FrameSide side,
                       const Tolerances& tol = {});

// Frame of coherent projectors onto the given directions.
OperatorFrame coherent_frame(std::span<const Direction> directions, int dim,
                             const Tolerances& tol = {});

// Vertices of the regular tetrahedron used by the qubit SIC preset.
std::array<Direction, 4> tetrahedral_directions();

// Qubit SIC-POVM E_n = (1/4)(I + n_n . sigma) with duals attached.
Povm preset_tetrahedral();

// Identity coefficients I^n = 4 / (1 + f^n . n_n) of four qubit coherent
// projectors, with f^n fixed by f^n . n_m = -1 for the other three m.
std::array<double, 4> identity_coefficients_f_vector(std::span<const Direction, 4> directions);

// The four directions n1, n2, n3, (n1 + n2 + n3)/sqrt(3).
std::array<Direction, 4> generic_qubit_directions(const Direction& n1, const Direction& n2,
                                                  const Direction& n3);

// Primal MIC-POVM on the generic qubit frame. The identity coefficients are
// computed both from the Gram inverse and from the f-vector closed form;
// disagreement beyond 1e-8 throws NumericalError.
Povm preset_generic_qubit(const Direction& n1, const Direction& n2, const Direction& n3);

// Three-outcome qubit POVM separating |+> from (|-> + |+>)/sqrt(2); |+> is
// basis vector 0.
Povm preset_discrimination();

}  // namespace micpovm
