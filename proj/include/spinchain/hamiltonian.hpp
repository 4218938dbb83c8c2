#pragma once

#include <cstdint>
#include <vector>

#include "spinchain/spin_algebra.hpp"
#include "spinchain/types.hpp"

namespace spinchain {

struct HamiltonianBuild {
  Matrix matrix;
  ModelParams params;
  bool hermitian;
  double hermiticity_defect;  // max |H - H^dagger| entry
};

// Local coupling terms of the chain for generic complex (a, eta):
// anisotropic NN exchange, isotropic NNN exchange and the staggered
// chiral three-spin terms, with periodic wrap.
std::vector<PauliTerm> local_terms(cplx a, cplx eta, int n_sites);
std::vector<PauliTerm> local_terms(const ModelParams& p);

HamiltonianBuild build_direct(const ModelParams& p);

// Same couplings for raw real (a, eta) outside the canonical regime windows;
// used by the symmetry checks which evaluate at shifted arguments.
Matrix build_raw(double a, double eta, int n_sites);

// sum_j { s_j.s_{j+1} - 2 abar^2 s_j.s_{j+2} + (-1)^j i abar s_{j+1}.(s_j x s_{j+2}) }
Matrix build_isotropic_limit(double abar, int n_sites);

struct SymmetryCheck {
  double shift_residual;     // || H(a, pi+eta) - H(pi-a, pi-eta) ||_max
  double period_residual;    // || H(a, eta) - H(pi+a, eta) ||_max
  double max() const { return shift_residual > period_residual ? shift_residual : period_residual; }
};
SymmetryCheck symmetry_identity_check(double a, double eta, int n_sites);

double hermiticity_defect(const Matrix& m);

// Fixed-magnetization ED support. Basis states are bit patterns with
// popcount(n_down) in ascending order; bit (n_sites - j) is site j.
std::vector<uint64_t> sector_basis(int n_sites, int n_down);
Matrix build_sector(const std::vector<PauliTerm>& terms, int n_sites, int n_down);

// Lowest eigenvalue over all magnetization sectors (hermitian regimes only).
double ground_energy(const ModelParams& p);
// Lowest eigenvalue within one sector.
double sector_ground_energy(const ModelParams& p, int n_down);

}  // namespace spinchain
