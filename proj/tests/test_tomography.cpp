#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "constructions.hpp"
#include "micpovm/error.hpp"
#include "micpovm/tomography.hpp"
#include "support.hpp"

using namespace micpovm;
using test::max_abs_diff;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::NumericalError;
}

DensityMatrix pure(const ComplexVector& v) { return DensityMatrix(HermitianOperator::outer(v / v.norm())); }

DensityMatrix maximally_mixed(int d) {
  return DensityMatrix(HermitianOperator(ComplexMatrix(ComplexMatrix::Identity(d, d) / double(d))));
}

ComplexVector ket(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return v;
}

double purity(const DensityMatrix& rho) { return hs_inner(rho.matrix(), rho.matrix()); }

}  // namespace

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(maximally_mixed(3));
  CHECK(kind_of([] { DensityMatrix(HermitianOperator::identity(2)); }) == ErrorKind::InvalidState);
  ComplexMatrix m(2, 2);
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK(kind_of([&] { DensityMatrix{HermitianOperator(m)}; }) == ErrorKind::InvalidState);
}

TEST_CASE("clip_to_state") {
  ComplexMatrix m(2, 2);
  m << 1.1, 0.0, 0.0, -0.1;
  const auto c = clip_to_state(HermitianOperator(m));
  CHECK(c.clipped == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(max_abs_diff(c.state.matrix().matrix(), ComplexMatrix(ket(1, 0) * ket(1, 0).adjoint())) < 1e-12);
  const auto same = clip_to_state(maximally_mixed(2).matrix());
  CHECK(same.clipped == 0.0);
}

TEST_CASE("probabilities examples") {
  const Povm tetra = preset_tetrahedral();
  for (double p : probabilities(maximally_mixed(2), tetra)) CHECK(p == doctest::Approx(0.25).epsilon(1e-14));

  const auto pole = pure(coherent_state(tetrahedral_directions()[0], 2).amplitudes());
  const auto probs = probabilities(pole, tetra);
  CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-12));
  for (int n = 1; n < 4; ++n) CHECK(probs[n] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const auto plus = pure(ket(1, 0));
  CHECK(std::abs(probabilities(plus, preset_discrimination())[0]) < 1e-15);

  CHECK(kind_of([&] { probabilities(maximally_mixed(3), tetra); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("probability bounds over random states") {
  for (int d : {2, 3, 4}) {
    const auto cs = test::all_constructions(d, 2024 + d);
    for (int s = 0; s < 1000; ++s) {
      const auto rho = random_density(d, std::nullopt, 9000 + s);
      for (const auto& c : cs) {
        const auto probs = probabilities(rho, c.povm);
        REQUIRE(std::abs(std::accumulate(probs.begin(), probs.end(), 0.0) - 1.0) <= 1e-10);
        for (double p : probs) {
          REQUIRE(p >= -1e-12);
          REQUIRE(p <= 1.0 + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("sample_outcomes") {
  const std::vector<double> point{1.0, 0.0, 0.0, 0.0};
  const auto c = sample_outcomes(point, 1000, 1);
  CHECK(c == std::vector<long long>{1000, 0, 0, 0});

  const std::vector<double> uniform(4, 0.25);
  const long long shots = 1000000;
  const auto counts = sample_outcomes(uniform, shots, 42);
  CHECK(std::accumulate(counts.begin(), counts.end(), 0LL) == shots);
  const double sigma = std::sqrt(0.25 * 0.75 / shots);
  for (long long k : counts) CHECK(std::abs(double(k) / shots - 0.25) <= 5 * sigma);

  CHECK(sample_outcomes(uniform, 5000, 7) == sample_outcomes(uniform, 5000, 7));
  CHECK(sample_outcomes(uniform, 5000, 7) != sample_outcomes(uniform, 5000, 8));

  CHECK(kind_of([&] { sample_outcomes(uniform, 0, 1); }) == ErrorKind::InvalidDistribution);
  CHECK(kind_of([] { sample_outcomes(std::vector<double>{0.5, 0.6}, 10, 1); }) ==
        ErrorKind::InvalidDistribution);
  CHECK(kind_of([] { sample_outcomes(std::vector<double>{1.5, -0.5}, 10, 1); }) ==
        ErrorKind::InvalidDistribution);
}

TEST_CASE("reconstruct") {
  const Povm tetra = preset_tetrahedral();
  const auto mixed = maximally_mixed(2);
  CHECK(max_abs_diff(reconstruct(probabilities(mixed, tetra), tetra).matrix(), mixed.matrix().matrix()) < 1e-12);

  Povm no_duals = tetra;
  no_duals.duals.reset();
  CHECK(kind_of([&] { reconstruct(probabilities(mixed, tetra), no_duals); }) == ErrorKind::MissingDuals);
  CHECK(kind_of([&] { reconstruct(std::vector<double>(3, 1.0 / 3), tetra); }) == ErrorKind::DimensionMismatch);

  // Finite shots: Hermitian, trace close to one, not repaired.
  const auto rho = random_density(2, 1, 5);
  for (long long shots : {10000LL, 1000000LL}) {
    const auto counts = sample_outcomes(probabilities(rho, tetra), shots, 11);
    std::vector<double> freqs;
    for (long long k : counts) freqs.push_back(double(k) / shots);
    const auto est = reconstruct(freqs, tetra);
    CHECK(std::abs(est.trace() - 1.0) <= 5.0 / std::sqrt(double(shots)));
    CHECK(max_abs_diff(est.matrix(), est.matrix().adjoint()) == 0.0);
  }
}

TEST_CASE("round trip through every construction") {
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto rho = random_density(d, std::nullopt, 70000 + 100 * d + trial);
      for (const auto& c : test::all_constructions(d, 80000 + 100 * d + trial)) {
        const auto est = reconstruct(probabilities(rho, c.povm), c.povm);
        INFO(c.name);
        REQUIRE((est.matrix() - rho.matrix().matrix()).norm() <= 1e-8);
      }
    }
  }
}

TEST_CASE("fidelity and trace distance") {
  const auto plus = pure(ket(1, 0));
  const auto minus = pure(ket(0, 1));
  CHECK(fidelity(plus, plus) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(plus, minus) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fidelity(plus, maximally_mixed(2)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fidelity(maximally_mixed(2), plus) == doctest::Approx(0.5).epsilon(1e-12));
  for (int s = 0; s < 50; ++s) {
    const auto rho = random_density(3, std::nullopt, 300 + s);
    CHECK(std::abs(fidelity(rho, rho) - 1.0) <= 1e-9);
  }
  CHECK(kind_of([&] { fidelity(plus, maximally_mixed(3)); }) == ErrorKind::DimensionMismatch);

  CHECK(trace_distance(plus.matrix(), minus.matrix()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_distance(plus.matrix(), maximally_mixed(2).matrix()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trace_distance(plus.matrix(), plus.matrix()) == 0.0);
}

TEST_CASE("random_density") {
  const auto pure_state = random_density(3, 1, 17);
  CHECK(std::abs(purity(pure_state) - 1.0) <= 1e-10);
  CHECK(purity(random_density(4, 4, 17)) < 1.0);
  CHECK(random_density(4, std::nullopt, 99).matrix().matrix() ==
        random_density(4, std::nullopt, 99).matrix().matrix());
  CHECK(kind_of([] { random_density(3, 0, 1); }) == ErrorKind::InvalidRank);
  CHECK(kind_of([] { random_density(3, 4, 1); }) == ErrorKind::InvalidRank);
}

TEST_CASE("discrimination verdicts") {
  const Povm p = preset_discrimination();
  CHECK(discriminate(0, p) == Verdict::NotPlus);
  CHECK(discriminate(1, p) == Verdict::Plus);
  CHECK(discriminate(2, p) == Verdict::Inconclusive);
  CHECK(kind_of([&] { discriminate(3, p); }) == ErrorKind::InvalidOutcome);
  CHECK(kind_of([&] { discriminate(-1, p); }) == ErrorKind::InvalidOutcome);
  CHECK(kind_of([] { discriminate(0, preset_tetrahedral()); }) == ErrorKind::InvalidOutcome);

  const auto plus = pure(ket(1, 0));
  const auto other = pure(ket(1, 1));
  const auto plus_counts = sample_outcomes(probabilities(plus, p), 10000, 3);
  const auto other_counts = sample_outcomes(probabilities(other, p), 10000, 4);
  CHECK(plus_counts[0] == 0);
  CHECK(other_counts[1] == 0);
  CHECK(plus_counts[1] > 0);
  CHECK(other_counts[0] > 0);
}

TEST_CASE("fidelity improves with shots") {
  const Povm tetra = preset_tetrahedral();
  const auto rho = random_density(2, std::nullopt, 123);
  std::vector<double> means, errs;
  for (long long shots : {100LL, 1000LL, 10000LL, 100000LL}) {
    double sum = 0.0, sq = 0.0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const auto r = run_tomography(rho, tetra, shots, 1000 * t + 7);
      REQUIRE(r.counts);
      REQUIRE(std::accumulate(r.counts->begin(), r.counts->end(), 0LL) == shots);
      sum += r.fidelity;
      sq += r.fidelity * r.fidelity;
    }
    const double mean = sum / trials;
    means.push_back(mean);
    errs.push_back(std::sqrt(std::max(0.0, sq / trials - mean * mean) / trials));
  }
  for (std::size_t i = 1; i < means.size(); ++i)
    CHECK(means[i] + 2 * std::hypot(errs[i], errs[i - 1]) >= means[i - 1]);
  CHECK(means.back() >= 0.99);
}

TEST_CASE("run_tomography exact mode") {
  const Povm tetra = preset_tetrahedral();
  const auto rho = random_density(2, std::nullopt, 3);
  const auto r = run_tomography(rho, tetra, std::nullopt, 3);
  CHECK(!r.counts);
  CHECK(!r.shots);
  CHECK(!r.seed);
  CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.trace_distance <= 1e-8);
  CHECK(r.psd_clip == 0.0);
}
