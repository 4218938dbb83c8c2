#include "spinchain/thermo.hpp"

#include <cmath>

#include "spinchain/quadrature.hpp"

namespace spinchain {

namespace {

void require_regime(const ModelParams& p) {
  if (p.regime == Regime::NonHermitian)
    throw std::invalid_argument("thermodynamic observables cover the two hermitian regimes");
}

double sech(double x) { return 1.0 / std::cosh(x); }

// Energy prefactor [cosh 4b - cos 2eta] resp. [cosh 2gamma - cos 4a].
double excitation_kernel(const ModelParams& p) {
  if (p.regime == Regime::RealEtaHermitian)
    return std::cosh(4.0 * p.b) - std::cos(2.0 * p.eta);
  return std::cosh(2.0 * p.gamma) - std::cos(4.0 * p.a);
}

double sin_eta(const ModelParams& p) {
  return p.regime == Regime::RealEtaHermitian ? std::sin(p.eta) : std::sinh(p.gamma);
}

}  // namespace

int series_cutoff(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("series cutoff needs gamma > 0");
  return static_cast<int>(std::ceil(28.0 / gamma));
}

double kernel_a(int n, double x, const ModelParams& p) {
  require_regime(p);
  if (p.regime == Regime::RealEtaHermitian) {
    const double den = std::cosh(x) - std::cos(n * p.eta);
    if (std::abs(den) < 1e-14) throw KernelPoleError("kernel pole: cosh x = cos(n eta)");
    return std::sin(n * p.eta) / (2.0 * pi * den);
  }
  const double den = std::cosh(n * p.gamma) - std::cos(x);
  return std::sinh(n * p.gamma) / (2.0 * pi * den);
}

double kernel_a_transform(int n, double omega, const ModelParams& p) {
  require_regime(p);
  if (p.regime == Regime::ImagEtaHermitian) return std::exp(-n * p.gamma * std::abs(omega));
  const double frac = n * p.eta / (2.0 * pi) - std::floor(n * p.eta / (2.0 * pi));
  const double c = pi - 2.0 * frac * pi;
  if (std::abs(omega) < 1e-12) return c / pi;
  return std::sinh(c * omega) / std::sinh(pi * omega);
}

double rho_ground(double u, const ModelParams& p, int omega_cutoff) {
  require_regime(p);
  if (p.regime == Regime::RealEtaHermitian) {
    const double w = pi / (2.0 * p.eta);
    return (sech(w * (u + 2.0 * p.b)) + sech(w * (u - 2.0 * p.b))) / (8.0 * p.eta);
  }
  const int cutoff = omega_cutoff > 0 ? omega_cutoff : series_cutoff(p.gamma);
  double s = 0.5;
  for (int w = 1; w <= cutoff; ++w)
    s += std::cos(u * w) * std::cos(2.0 * p.a * w) / std::cosh(p.gamma * w);
  return s / (2.0 * pi);
}

double ground_energy_density(const ModelParams& p, int omega_cutoff) {
  require_regime(p);
  if (p.regime == Regime::RealEtaHermitian) {
    const double se = std::sin(p.eta), ce = std::cos(p.eta);
    const double c2b = std::cosh(2.0 * p.b);
    const double constant = ce * (c2b * c2b - std::cos(2.0 * p.eta)) / (2.0 * se * se);
    auto integrand = [&](double w) {
      const double c = std::cos(2.0 * p.b * w);
      const double ratio = std::abs(w) < 1e-8 ? (pi - p.eta) / pi
                                              : std::sinh((pi - p.eta) * w) / std::sinh(pi * w);
      return ratio * c * c / std::cosh(p.eta * w);
    };
    const double integral = integrate_real_line(integrand, 1e-10, 4.0 / std::min(1.0, p.eta));
    return constant - excitation_kernel(p) / se * integral;
  }
  const double sh = std::sinh(p.gamma), ch = std::cosh(p.gamma);
  const double c2a = std::cos(2.0 * p.a);
  const double constant = ch * (std::cosh(2.0 * p.gamma) - c2a * c2a) / (2.0 * sh * sh);
  const int cutoff = omega_cutoff > 0 ? omega_cutoff : series_cutoff(p.gamma);
  double series = 1.0;  // omega = 0 term
  for (int w = 1; w <= cutoff; ++w) {
    const double c = std::cos(2.0 * p.a * w);
    series += 2.0 * c * c * std::exp(-p.gamma * w) / std::cosh(p.gamma * w);
  }
  return constant + (std::cos(4.0 * p.a) - std::cosh(2.0 * p.gamma)) / sh * series;
}

double spinon_momentum(double u_r, double u_s, const ModelParams& p) {
  require_regime(p);
  if (p.regime == Regime::RealEtaHermitian) {
    const double w = pi / (2.0 * p.eta);
    double k = 0.0;
    for (double u : {u_r, u_s})
      k += std::atan(std::exp(-w * (u - 2.0 * p.b))) + std::atan(std::exp(-w * (u + 2.0 * p.b)));
    return k;
  }
  const int cutoff = series_cutoff(p.gamma);
  double k = pi - 0.5 * (u_r + u_s);
  for (int w = 1; w <= cutoff; ++w)
    k -= std::cos(2.0 * p.a * w) * (std::sin(u_r * w) + std::sin(u_s * w)) /
         (w * std::cosh(p.gamma * w));
  // Reduce to (-pi, pi]; the series leaves an overall 2 pi ambiguity.
  k = std::remainder(k, 2.0 * pi);
  if (k <= -pi) k += 2.0 * pi;
  return k;
}

double spinon_eps(double u, const ModelParams& p) {
  return 4.0 * pi * excitation_kernel(p) * rho_ground(u, p) / sin_eta(p);
}

HoleExcitation spinon_energy(double u_r, double u_s, const ModelParams& p) {
  HoleExcitation h{};
  h.u_r = u_r;
  h.u_s = u_s;
  h.eps_r = spinon_eps(u_r, p);
  h.eps_s = spinon_eps(u_s, p);
  h.delta_e = h.eps_r + h.eps_s;
  h.momentum = spinon_momentum(u_r, u_s, p);
  return h;
}

double hole_grid_halfwidth(const ModelParams& p) {
  if (p.regime == Regime::ImagEtaHermitian) return pi;
  return 2.0 * std::abs(p.b) + 12.0 * std::max(1.0, p.eta);
}

std::vector<DispersionPoint> dispersion_curve(const ModelParams& p, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("dispersion needs at least 2 samples");
  const double half = hole_grid_halfwidth(p);
  std::vector<DispersionPoint> pts;
  pts.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double u = -half + 2.0 * half * double(i) / double(n_samples - 1);
    const HoleExcitation h = spinon_energy(u, u, p);
    pts.push_back({u, u, h.momentum, h.delta_e});
  }
  return pts;
}

std::vector<DispersionPoint> dispersion_grid(const ModelParams& p, int n_per_axis) {
  if (n_per_axis < 2) throw std::invalid_argument("dispersion needs at least 2 samples");
  const double half = hole_grid_halfwidth(p);
  std::vector<DispersionPoint> pts;
  pts.reserve(static_cast<size_t>(n_per_axis) * n_per_axis);
  for (int i = 0; i < n_per_axis; ++i) {
    const double ur = -half + 2.0 * half * double(i) / double(n_per_axis - 1);
    for (int j = 0; j < n_per_axis; ++j) {
      const double us = -half + 2.0 * half * double(j) / double(n_per_axis - 1);
      const HoleExcitation h = spinon_energy(ur, us, p);
      pts.push_back({ur, us, h.momentum, h.delta_e});
    }
  }
  return pts;
}

std::string to_string(GapBranch b) { return b == GapBranch::Outer ? "outer" : "inner"; }

GapResult gap(double a, double gamma, int omega_cutoff) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gap needs gamma > 0");
  if (a < 0.0 || a > pi) throw std::invalid_argument("gap expects a in [0, pi]");
  const int cutoff = omega_cutoff > 0 ? omega_cutoff : series_cutoff(gamma);
  const bool outer = (a <= 0.25 * pi) || (a >= 0.75 * pi);

  double series = 0.5;  // omega = 0
  for (int w = 1; w <= cutoff; ++w) {
    const double sign = outer ? (w % 2 == 0 ? 1.0 : -1.0) : 1.0;
    series += sign * std::cos(2.0 * a * w) / std::cosh(gamma * w);
  }
  GapResult g{};
  g.a = a;
  g.gamma = gamma;
  g.branch = outer ? GapBranch::Outer : GapBranch::Inner;
  g.gap = 4.0 * (std::cosh(2.0 * gamma) - std::cos(4.0 * a)) / std::sinh(gamma) * series;
  return g;
}

double delta_rho_smooth(double u, double u_r, double u_s, const ModelParams& p) {
  if (p.regime != Regime::RealEtaHermitian)
    throw std::invalid_argument("delta_rho back-transform implemented for the real-eta regime");
  // delta_rho_tilde(w) = -(e^{i w u_r} + e^{i w u_s}) / (1 + a2_tilde(w)); the
  // non-decaying piece inverts to the two hole spikes, the remainder decays
  // like a2_tilde and is inverted numerically here.
  auto integrand = [&](double w) {
    const double a2 = kernel_a_transform(2, w, p);
    const double h = a2 / (1.0 + a2);
    return h * (std::cos(w * (u - u_r)) + std::cos(w * (u - u_s))) / (2.0 * pi);
  };
  return integrate_real_line(integrand, 1e-10, 4.0 / std::min(1.0, p.eta));
}

DensityProfile density_profile(const ModelParams& p, double u_min, double u_max, int n_points) {
  if (n_points < 2) throw std::invalid_argument("density profile needs at least 2 points");
  DensityProfile prof;
  prof.regime = p.regime;
  prof.grid.reserve(n_points);
  prof.rho.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double u = u_min + (u_max - u_min) * double(i) / double(n_points - 1);
    prof.grid.push_back(u);
    prof.rho.push_back(rho_ground(u, p));
    prof.rho_hole.push_back(0.0);  // no holes in the ground state
  }
  return prof;
}

}  // namespace spinchain
