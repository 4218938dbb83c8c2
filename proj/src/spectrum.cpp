#include "spinchain/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spinchain/hamiltonian.hpp"

namespace spinchain {

namespace {

constexpr Eigen::Index kDimLimit = 4096;

bool complex_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void verify_residuals(const Matrix& h, const Vector& values, const Matrix& vectors) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff() * std::sqrt(double(h.rows())));
  const Eigen::Index n = values.size();
  const Eigen::Index stride = std::max<Eigen::Index>(1, n / 8);
  for (Eigen::Index k = 0; k < n; k += stride) {
    const double resid = (h * vectors.col(k) - values(k) * vectors.col(k)).norm() / scale;
    if (!(resid < 1e-9))
      throw ConvergenceError("eigenpair residual " + std::to_string(resid) + " above 1e-9");
  }
}

}  // namespace

std::vector<Level> group_levels(const std::vector<cplx>& values, double tol) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) < tol) {
        const int ri = find(i), rj = find(j);
        if (ri != rj) parent[ri] = rj;
      }

  std::vector<cplx> sums(n, 0.0);
  std::vector<int> counts(n, 0);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    sums[r] += values[i];
    counts[r] += 1;
  }
  std::vector<Level> levels;
  for (int i = 0; i < n; ++i)
    if (counts[i] > 0) levels.push_back({sums[i] / double(counts[i]), counts[i]});
  std::sort(levels.begin(), levels.end(),
            [](const Level& a, const Level& b) { return complex_less(a.value, b.value); });
  return levels;
}

SpectrumResult eigs(const Matrix& h, bool hermitian_hint, const EigsOptions& opt) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eigs: matrix must be square");
  if (h.rows() > kDimLimit)
    throw DimensionError("matrix dimension " + std::to_string(h.rows()) +
                         " exceeds the dense limit 4096; restrict to a magnetization "
                         "sector or reduce the chain size");

  SpectrumResult res;
  if (hermitian_hint) {
    if (hermiticity_defect(h) > 1e-8 * std::max(1.0, h.cwiseAbs().maxCoeff()))
      throw std::invalid_argument("eigs: hermitian_hint set but matrix is not hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw ConvergenceError("hermitian eigensolver failed");
    verify_residuals(h, solver.eigenvalues().cast<cplx>(), solver.eigenvectors());
    res.eigenvalues.reserve(solver.eigenvalues().size());
    for (double v : solver.eigenvalues()) res.eigenvalues.emplace_back(v, 0.0);
  } else {
    Eigen::ComplexEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw ConvergenceError("complex eigensolver failed");
    verify_residuals(h, solver.eigenvalues(), solver.eigenvectors());
    res.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  }
  std::sort(res.eigenvalues.begin(), res.eigenvalues.end(), complex_less);

  res.spectral_radius = 0.0;
  res.max_imag = 0.0;
  for (const cplx& v : res.eigenvalues) {
    res.spectral_radius = std::max(res.spectral_radius, std::abs(v));
    res.max_imag = std::max(res.max_imag, std::abs(v.imag()));
  }
  const double rtol = opt.reality_tol >= 0 ? opt.reality_tol : 1e-8 * res.spectral_radius;
  res.all_real = res.max_imag < rtol;
  const double gtol = opt.group_tol >= 0 ? opt.group_tol : 1e-6 * res.spectral_radius;
  res.levels = group_levels(res.eigenvalues, gtol);
  return res;
}

RealityScanResult reality_scan(double eta, int n_sites, double a_step) {
  if (!(eta > 0.0 && eta < pi)) throw std::invalid_argument("reality_scan: eta must be in (0, pi)");
  if (!(a_step > 0.0)) throw std::invalid_argument("reality_scan: a_step must be positive");

  RealityScanResult scan;
  for (double x = 0.0; x <= pi + 0.5 * a_step; x += a_step)
    scan.a_grid.push_back(std::min(x, pi));
  if (scan.a_grid.back() < pi) scan.a_grid.push_back(pi);

  scan.all_real_flags.resize(scan.a_grid.size());
  scan.max_imags.resize(scan.a_grid.size());
  for (size_t i = 0; i < scan.a_grid.size(); ++i) {
    const Matrix h = build_raw(scan.a_grid[i], eta, n_sites);
    const SpectrumResult s = eigs(h, false);
    scan.all_real_flags[i] = s.all_real;
    scan.max_imags[i] = s.max_imag;
  }

  for (size_t i = 0; i < scan.a_grid.size(); ++i) {
    if (!scan.all_real_flags[i]) continue;
    size_t j = i;
    while (j + 1 < scan.a_grid.size() && scan.all_real_flags[j + 1]) ++j;
    scan.intervals.emplace_back(scan.a_grid[i], scan.a_grid[j]);
    i = j;
  }
  return scan;
}

}  // namespace spinchain
