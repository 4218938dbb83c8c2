#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinchain {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx iu{0.0, 1.0};

// Anisotropy at or too close to sin(eta) = 0: R-matrix entries diverge.
class SingularAnisotropyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// phi(2a) = 0: the Hamiltonian reconstruction prefactor is singular.
class ResonantInhomogeneityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two Bethe roots coincide (modulo the parametrization period).
class RootCollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Energy/density kernel evaluated at a pole.
class KernelPoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix dimension above the supported dense-solver limit.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Regime { RealEtaHermitian, ImagEtaHermitian, NonHermitian };

std::string to_string(Regime r);

// Chain size plus coupling constants. Exactly one anisotropy (eta or gamma)
// and one inhomogeneity (b or a) field is meaningful per regime:
//   RealEtaHermitian: eta in (0, pi), a = i*b with b real
//   ImagEtaHermitian: eta = i*gamma with gamma > 0, a real
//   NonHermitian:     eta in (0, pi), a real
struct ModelParams {
  int n_sites = 0;  // 2N, even
  Regime regime = Regime::RealEtaHermitian;
  double eta = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;

  static ModelParams real_eta(int n_sites, double eta, double b);
  static ModelParams imag_eta(int n_sites, double gamma, double a);
  static ModelParams non_hermitian(int n_sites, double eta, double a);

  int half_sites() const { return n_sites / 2; }  // N

  // Anisotropy and inhomogeneity as complex numbers, regime resolved.
  cplx eta_c() const;
  cplx a_c() const;

  bool hermitian_regime() const { return regime != Regime::NonHermitian; }

  // The real inhomogeneity knob (b in the real-eta regime, a otherwise).
  double inhomogeneity() const;
  ModelParams with_inhomogeneity(double value) const;
};

}  // namespace spinchain
