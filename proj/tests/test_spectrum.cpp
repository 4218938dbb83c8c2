#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spinchain/hamiltonian.hpp"
#include "spinchain/spectrum.hpp"

using namespace spinchain;

TEST_CASE("diagonal matrix spectrum") {
  Matrix h = Matrix::Zero(3, 3);
  h.diagonal() << 1.0, 2.0, 3.0;
  const SpectrumResult s = eigs(h, true);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(std::abs(s.eigenvalues[0] - 1.0) < 1e-14);
  CHECK(std::abs(s.eigenvalues[2] - 3.0) < 1e-14);
  CHECK(s.all_real);
}

TEST_CASE("published spectrum groups into eight levels with the right degeneracy") {
  const SpectrumResult s = eigs(build_direct(ModelParams::real_eta(4, 1.0, 1.0)).matrix, true);
  REQUIRE(s.eigenvalues.size() == 16);
  CHECK(s.levels.size() == 8);
  int total = 0;
  bool found_degenerate = false;
  for (const Level& l : s.levels) {
    total += l.multiplicity;
    if (std::abs(l.value - cplx(-20.0748)) < 5e-4) found_degenerate = l.multiplicity >= 2;
  }
  CHECK(total == 16);
  CHECK(found_degenerate);
}

TEST_CASE("group_levels merges within tolerance") {
  const auto levels = group_levels({cplx(1.0), cplx(1.0 + 1e-12), cplx(5.0)}, 1e-9);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].multiplicity == 2);
  CHECK(std::abs(levels[0].value - 1.0) < 1e-11);
  CHECK(levels[1].multiplicity == 1);
}

TEST_CASE("group_levels with zero tolerance keeps every value") {
  const auto levels = group_levels({cplx(1.0), cplx(1.0), cplx(2.0)}, 0.0);
  CHECK(levels.size() == 3);
}

TEST_CASE("group_levels single-linkage chains clusters") {
  const auto levels = group_levels({cplx(0.0), cplx(0.9e-6), cplx(1.8e-6), cplx(1.0)}, 1e-6);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].multiplicity == 3);
}

TEST_CASE("hermitian and general paths agree on a random hermitian matrix") {
  auto gen = oracles::rng(42);
  Matrix h(64, 64);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) h(i, j) = oracles::random_cplx(gen);
  h = (h + Matrix(h.adjoint())).eval();

  const SpectrumResult sa = eigs(h, true);
  const SpectrumResult sg = eigs(h, false);
  REQUIRE(sa.eigenvalues.size() == sg.eigenvalues.size());
  const double scale = sa.spectral_radius;
  for (size_t i = 0; i < sa.eigenvalues.size(); ++i)
    CHECK(std::abs(sa.eigenvalues[i] - sg.eigenvalues[i]) < 1e-9 * scale);

  // eigenvalue sum equals the trace
  cplx sum = 0.0;
  for (const cplx& v : sa.eigenvalues) sum += v;
  CHECK(std::abs(sum - h.trace()) < 1e-9 * std::abs(h.trace()));
}

TEST_CASE("eigs input validation") {
  CHECK_THROWS_AS(eigs(Matrix::Zero(2, 3), false), std::invalid_argument);
  CHECK_THROWS_AS(eigs(Matrix::Zero(4097, 4097), false), DimensionError);
  Matrix h(2, 2);
  h << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(eigs(h, true), std::invalid_argument);  // hint on a non-hermitian input
}

TEST_CASE("reality scan detects intervals and the hermitian endpoint") {
  const RealityScanResult scan = reality_scan(0.8, 4, 0.05);
  REQUIRE(!scan.a_grid.empty());
  // a = 0 is the hermitian XXZ point: first flag must be set
  CHECK(scan.all_real_flags.front());
  // a = pi is equivalent to a = 0
  CHECK(scan.all_real_flags.back());
  REQUIRE(scan.intervals.size() >= 1);

  // flags are symmetric under a -> pi - a combined with eta -> pi - eta
  const RealityScanResult mirrored = reality_scan(pi - 0.8, 4, 0.05);
  REQUIRE(mirrored.a_grid.size() == scan.a_grid.size());
  const size_t n = scan.a_grid.size();
  for (size_t i = 0; i < n; ++i)
    CHECK(scan.all_real_flags[i] == mirrored.all_real_flags[n - 1 - i]);
}

TEST_CASE("reality scan with eta above pi/2 is real everywhere") {
  const RealityScanResult scan = reality_scan(2.0, 4, 0.05);
  REQUIRE(scan.intervals.size() == 1);
  CHECK(scan.intervals[0].first == 0.0);
  CHECK(scan.intervals[0].second == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("reality scan argument validation") {
  CHECK_THROWS_AS(reality_scan(0.0, 4, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(reality_scan(0.8, 4, 0.0), std::invalid_argument);
}
