#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "micpovm/hermitian.hpp"
#include "micpovm/random.hpp"

namespace micpovm {

// Unit vector on the sphere; normalized at construction.
class Direction {
 public:
  Direction(double x, double y, double z);

  double x() const noexcept { return v_[0]; }
  double y() const noexcept { return v_[1]; }
  double z() const noexcept { return v_[2]; }
  const std::array<double, 3>& components() const noexcept { return v_; }

  double dot(const Direction& o) const noexcept {
    return v_[0] * o.v_[0] + v_[1] * o.v_[1] + v_[2] * o.v_[2];
  }
  Direction operator-() const { return Direction(-v_[0], -v_[1], -v_[2]); }

 private:
  std::array<double, 3> v_;
};

// Normalized state vector in C^d.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);

  int dim() const noexcept { return static_cast<int>(a_.size()); }
  const ComplexVector& amplitudes() const noexcept { return a_; }
  HermitianOperator projector() const { return HermitianOperator::outer(a_); }

 private:
  ComplexVector a_;
};

// Spin-(d-1)/2 coherent state along n in the S_z basis |s, s-k>, k = 0..d-1:
//   a_k = sqrt(C(d-1, k)) cos(theta/2)^(d-1-k) sin(theta/2)^k e^{i k phi}.
// a_0 is real and non-negative; at the south pole the state is |s, -s>.
StateVector coherent_state(const Direction& n, int dim);

HermitianOperator coherent_projector(const Direction& n, int dim);

std::vector<HermitianOperator> coherent_projectors(std::span<const Direction> directions, int dim);

// |<n|n'>|^2 between coherent states.
double overlap_sq(const Direction& n, const Direction& m, int dim);

// Uniform directions on the sphere from normalized Gaussian triples.
class DirectionSampler {
 public:
  explicit DirectionSampler(std::uint64_t seed) : rng_(seed) {}
  Direction next();

 private:
  Rng rng_;
};

// `count` uniform directions, deterministic in `seed`. Any draw that is
// antipodal (n . n' < -1 + 1e-12) to an earlier one is redrawn.
std::vector<Direction> sample_directions(int count, std::uint64_t seed);

// || (d / samples) sum_k |n_k><n_k| - I ||_F for uniform n_k.
double resolution_of_identity_mc(int dim, long long samples, std::uint64_t seed);

}  // namespace micpovm
