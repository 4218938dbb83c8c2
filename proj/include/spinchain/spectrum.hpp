#pragma once

#include <utility>
#include <vector>

#include "spinchain/types.hpp"

namespace spinchain {

struct Level {
  cplx value;        // cluster mean
  int multiplicity;
};

struct SpectrumResult {
  std::vector<cplx> eigenvalues;  // sorted by (re, im)
  std::vector<Level> levels;
  bool all_real;
  double max_imag;
  double spectral_radius;
};

struct EigsOptions {
  double group_tol = -1.0;    // < 0: 1e-6 * spectral radius
  double reality_tol = -1.0;  // < 0: 1e-8 * spectral radius
};

// Full dense eigensolution. The hermitian path returns exactly real values;
// the general path returns complex values. Eigenpair residuals are verified
// on a sample of vectors.
SpectrumResult eigs(const Matrix& h, bool hermitian_hint, const EigsOptions& opt = {});

// Single-linkage clustering in the complex plane with threshold tol
// (strictly-less comparison, so tol = 0 keeps every value separate).
std::vector<Level> group_levels(const std::vector<cplx>& values, double tol);

struct RealityScanResult {
  std::vector<double> a_grid;
  std::vector<bool> all_real_flags;
  std::vector<double> max_imags;
  std::vector<std::pair<double, double>> intervals;  // maximal all-real a-windows
};

// Scan a over [0, pi] in the nonhermitian regime and flag all-real spectra.
RealityScanResult reality_scan(double eta, int n_sites, double a_step);

}  // namespace spinchain
