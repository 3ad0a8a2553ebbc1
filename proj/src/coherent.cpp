#include "micpovm/coherent.hpp"

#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "micpovm/error.hpp"

namespace micpovm {

namespace {

constexpr double kAntipodalSlack = 1e-12;

void require_dim(int dim) {
  if (dim < 2) {
    throw Error(ErrorKind::DimensionUnsupported,
                "coherent states need dim >= 2, got " + std::to_string(dim));
  }
}

}  // namespace

Direction::Direction(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::MalformedInput, "direction must be a finite nonzero vector");
  }
  v_ = {x / r, y / r, z / r};
}

StateVector::StateVector(ComplexVector amplitudes) : a_(std::move(amplitudes)) {
  const double norm = a_.norm();
  if (a_.size() < 1 || !(norm > 0.0)) {
    throw Error(ErrorKind::InvalidState, "state vector must be nonzero");
  }
  a_ /= norm;
}

StateVector coherent_state(const Direction& n, int dim) {
  require_dim(dim);
  const int two_s = dim - 1;
  // Half-angle functions straight from z; more accurate than acos near the poles.
  const double cos_half = std::sqrt(std::max(0.0, 0.5 * (1.0 + n.z())));
  const double sin_half = std::sqrt(std::max(0.0, 0.5 * (1.0 - n.z())));
  ComplexVector a = ComplexVector::Zero(dim);
  if (cos_half == 0.0) {
    a(two_s) = 1.0;
    return StateVector(std::move(a));
  }
  const double phi = std::atan2(n.y(), n.x());
  double binom = 1.0;
  for (int k = 0; k <= two_s; ++k) {
    const double mag = std::sqrt(binom) * std::pow(cos_half, two_s - k) * std::pow(sin_half, k);
    a(k) = std::polar(mag, k * phi);
    binom = binom * (two_s - k) / (k + 1);
  }
  return StateVector(std::move(a));
}

HermitianOperator coherent_projector(const Direction& n, int dim) {
  return coherent_state(n, dim).projector();
}

std::vector<HermitianOperator> coherent_projectors(std::span<const Direction> directions,
                                                   int dim) {
  std::vector<HermitianOperator> out;
  out.reserve(directions.size());
  for (const auto& n : directions) out.push_back(coherent_projector(n, dim));
  return out;
}

double overlap_sq(const Direction& n, const Direction& m, int dim) {
  const auto a = coherent_state(n, dim);
  const auto b = coherent_state(m, dim);
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

Direction DirectionSampler::next() {
  for (;;) {
    const double x = rng_.normal();
    const double y = rng_.normal();
    const double z = rng_.normal();
    if (x * x + y * y + z * z > 1e-300) return Direction(x, y, z);
  }
}

std::vector<Direction> sample_directions(int count, std::uint64_t seed) {
  if (count < 1) {
    throw Error(ErrorKind::InvalidCount, "direction count must be >= 1, got " + std::to_string(count));
  }
  // Antipodal candidates differ from -n by at most ~1.5e-6 in each component,
  // so a grid of cell size 1e-4 only needs the neighbouring cells searched.
  constexpr double kCell = 1e-4;
  using Key = std::tuple<long, long, long>;
  auto key_of = [&](double x, double y, double z) {
    return Key{std::lround(x / kCell), std::lround(y / kCell), std::lround(z / kCell)};
  };
  std::multimap<Key, std::size_t> grid;

  DirectionSampler sampler(seed);
  std::vector<Direction> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const Direction n = sampler.next();
    const auto [kx, ky, kz] = key_of(-n.x(), -n.y(), -n.z());
    bool antipodal = false;
    for (long dx = -1; dx <= 1 && !antipodal; ++dx)
      for (long dy = -1; dy <= 1 && !antipodal; ++dy)
        for (long dz = -1; dz <= 1 && !antipodal; ++dz) {
          auto [lo, hi] = grid.equal_range(Key{kx + dx, ky + dy, kz + dz});
          for (auto it = lo; it != hi; ++it) {
            if (n.dot(out[it->second]) < -1.0 + kAntipodalSlack) {
              antipodal = true;
              break;
            }
          }
        }
    if (antipodal) continue;
    grid.emplace(key_of(n.x(), n.y(), n.z()), out.size());
    out.push_back(n);
  }
  return out;
}

double resolution_of_identity_mc(int dim, long long samples, std::uint64_t seed) {
  require_dim(dim);
  if (samples < 1) {
    throw Error(ErrorKind::InvalidCount, "sample count must be >= 1");
  }
  DirectionSampler sampler(seed);
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (long long k = 0; k < samples; ++k) {
    const auto psi = coherent_state(sampler.next(), dim);
    sum.noalias() += psi.amplitudes() * psi.amplitudes().adjoint();
  }
  sum *= static_cast<double>(dim) / static_cast<double>(samples);
  return (sum - ComplexMatrix::Identity(dim, dim)).norm();
}

}  // namespace micpovm
