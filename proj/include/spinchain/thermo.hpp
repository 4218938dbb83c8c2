#pragma once

#include <vector>

#include "spinchain/types.hpp"

namespace spinchain {

// Thermodynamic-limit observables. The real-eta regime lives on the full
// line (rapidities u in R); the imag-eta regime lives on the circle
// u in (-pi, pi] with integer Fourier modes.

// Series cutoff with tail below 1e-12: ceil(28 / gamma).
int series_cutoff(double gamma);

// a_n(x): sin(n eta) / (2 pi (cosh x - cos n eta))  [real eta]
//         sinh(n gamma) / (2 pi (cosh n gamma - cos x))  [imag eta]
double kernel_a(int n, double x, const ModelParams& p);

// Fourier transform of a_n: sinh((pi - 2 pi delta_n) w) / sinh(pi w) with
// delta_n = frac(n eta / 2 pi) for real eta; exp(-n gamma |w|) for imag eta.
double kernel_a_transform(int n, double omega, const ModelParams& p);

// Ground-state Bethe root density. omega_cutoff < 0 uses series_cutoff(gamma)
// (imag-eta regime; the real-eta closed form has no series).
double rho_ground(double u, const ModelParams& p, int omega_cutoff = -1);

// Ground-state energy per site.
double ground_energy_density(const ModelParams& p, int omega_cutoff = -1);

// Two-hole (spinon pair) excitation momentum. Real eta: the arctan closed
// form, K in (0, 2 pi). Imag eta: Fourier series, reduced to (-pi, pi].
double spinon_momentum(double u_r, double u_s, const ModelParams& p);

// Single-hole energy epsilon(u) = 4 pi [kernel] rho_g(u) / sin eta.
double spinon_eps(double u, const ModelParams& p);

struct HoleExcitation {
  double u_r, u_s;
  double momentum;
  double delta_e;  // eps_r + eps_s
  double eps_r, eps_s;
};
HoleExcitation spinon_energy(double u_r, double u_s, const ModelParams& p);

struct DispersionPoint {
  double u_r, u_s, momentum, delta_e;
};
// Diagonal cut u_r = u_s over the hole grid.
std::vector<DispersionPoint> dispersion_curve(const ModelParams& p, int n_samples);
// Full pair grid (n x n points).
std::vector<DispersionPoint> dispersion_grid(const ModelParams& p, int n_per_axis);
// Default hole-grid half-width (real eta) covering the density tails.
double hole_grid_halfwidth(const ModelParams& p);

enum class GapBranch { Outer, Inner };
std::string to_string(GapBranch b);

struct GapResult {
  double a, gamma, gap;
  GapBranch branch;
};
// Spinon pair gap for imaginary anisotropy. Holes sit at u = pi on the
// outer branch a in [0, pi/4] U [3pi/4, pi], at u = 0 on the inner branch.
GapResult gap(double a, double gamma, int omega_cutoff = -1);

// Two holes shift the root density by
//   2N * delta_rho(u) = -delta(u - u_r) - delta(u - u_s) + g(u),
// with g_tilde(w) = (e^{i w u_r} + e^{i w u_s}) a2_tilde(w) / (1 + a2_tilde(w)).
// Returns the smooth part g(u); the delta spikes must be added analytically.
// Real-eta regime.
double delta_rho_smooth(double u, double u_r, double u_s, const ModelParams& p);

struct DensityProfile {
  std::vector<double> grid;
  std::vector<double> rho;
  std::vector<double> rho_hole;
  Regime regime;
};
DensityProfile density_profile(const ModelParams& p, double u_min, double u_max, int n_points);

}  // namespace spinchain
