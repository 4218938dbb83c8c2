#include "spinchain/types.hpp"

#include <cmath>

namespace spinchain {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::RealEtaHermitian: return "real-eta-hermitian";
    case Regime::ImagEtaHermitian: return "imag-eta-hermitian";
    case Regime::NonHermitian: return "nonhermitian";
  }
  return "unknown";
}

namespace {

void check_sites(int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::invalid_argument("n_sites must be even and >= 2, got " + std::to_string(n_sites));
}

}  // namespace

ModelParams ModelParams::real_eta(int n_sites, double eta, double b) {
  check_sites(n_sites);
  if (!(eta > 0.0 && eta < pi))
    throw std::invalid_argument("real-eta regime requires eta in (0, pi)");
  ModelParams p;
  p.n_sites = n_sites;
  p.regime = Regime::RealEtaHermitian;
  p.eta = eta;
  p.b = b;
  return p;
}

ModelParams ModelParams::imag_eta(int n_sites, double gamma, double a) {
  check_sites(n_sites);
  if (!(gamma > 0.0))
    throw std::invalid_argument("imag-eta regime requires gamma > 0");
  ModelParams p;
  p.n_sites = n_sites;
  p.regime = Regime::ImagEtaHermitian;
  p.gamma = gamma;
  p.a = a;
  return p;
}

ModelParams ModelParams::non_hermitian(int n_sites, double eta, double a) {
  check_sites(n_sites);
  if (!(eta > 0.0 && eta < pi))
    throw std::invalid_argument("nonhermitian regime requires eta in (0, pi)");
  ModelParams p;
  p.n_sites = n_sites;
  p.regime = Regime::NonHermitian;
  p.eta = eta;
  p.a = a;
  return p;
}

cplx ModelParams::eta_c() const {
  return regime == Regime::ImagEtaHermitian ? cplx(0.0, gamma) : cplx(eta, 0.0);
}

cplx ModelParams::a_c() const {
  return regime == Regime::RealEtaHermitian ? cplx(0.0, b) : cplx(a, 0.0);
}

double ModelParams::inhomogeneity() const {
  return regime == Regime::RealEtaHermitian ? b : a;
}

ModelParams ModelParams::with_inhomogeneity(double value) const {
  ModelParams p = *this;
  if (regime == Regime::RealEtaHermitian)
    p.b = value;
  else
    p.a = value;
  return p;
}

}  // namespace spinchain
