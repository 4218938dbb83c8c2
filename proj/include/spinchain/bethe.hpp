#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "spinchain/spectrum.hpp"
#include "spinchain/types.hpp"

namespace spinchain {

enum class BaeFamily { RationalLambda, RealEtaU, ImagEtaU, NonHermitianU };

BaeFamily family_for(const ModelParams& p);

struct BetheRoots {
  BaeFamily family = BaeFamily::RealEtaU;
  std::vector<cplx> roots;
  std::vector<double> quantum_numbers;  // empty when not from the log form
  double residual = std::numeric_limits<double>::quiet_NaN();
  int magnons() const { return static_cast<int>(roots.size()); }
};

// Per-root defect LHS - RHS of the regime's Bethe equations. Throws
// RootCollisionError if two roots coincide modulo the parametrization period.
std::vector<cplx> bae_residual(const BetheRoots& roots, const ModelParams& p);
double bae_residual_max(const BetheRoots& roots, const ModelParams& p);

// Log-form defect N[theta_1(u_j+2b) + theta_1(u_j-2b)] - 2 pi I_j
//   - sum_k theta_2(u_j-u_k), real-eta regime, real roots.
std::vector<double> bae_log_residual(const std::vector<double>& u, const std::vector<double>& qn,
                                     const ModelParams& p);

// theta_n(x) = 2 arctan( tanh(x/2) / tan(n eta / 2) )
double theta_fn(int n, double x, double eta);

// Counting function Z(u); Z(u_j) = I_j / n_sites at a solution.
double counting_function(double u, const BetheRoots& roots, const ModelParams& p);

struct SolveOptions {
  int seeds = 200;
  std::uint64_t rng_seed = 1;
  int continuation_steps = 10;
  double accept_tol = 1e-10;
  double newton_tol = 1e-12;
  int max_iterations = 80;
  bool use_log_form = true;
  bool use_random_seeds = true;
  bool use_continuation = true;
};

// Deduplicated solutions of the M-magnon sector: log-form Newton over
// admissible quantum-number tuples for real branches plus damped Newton on
// random complex seeds, with continuation from the homogeneous (XXZ) point.
std::vector<BetheRoots> solve_bae(const ModelParams& p, int magnons,
                                  const SolveOptions& opt = {});

// Energy eigenvalue from a root set via the regime's closed form.
cplx energy_from_roots(const BetheRoots& roots, const ModelParams& p);

// Convert u-parametrized roots to the rational lambda parametrization.
std::vector<cplx> to_lambda(const BetheRoots& roots, const ModelParams& p);

// Wrap a root into the canonical strip: Im in [-pi, pi) for the sinh-type
// families, Re in [-pi, pi) for the sin-type family.
cplx canonical_root(cplx u, BaeFamily family);
// Distance between root multisets modulo period and permutation.
double root_set_distance(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         BaeFamily family);

struct MatchEntry {
  cplx bethe_energy;
  cplx level;
  double defect;
};

struct CompletenessReport {
  std::vector<MatchEntry> matched;
  std::vector<cplx> unmatched_levels;
  double coverage_fraction = 0.0;
};

// Greedy nearest matching of Bethe energies against grouped ED levels.
CompletenessReport match_spectrum(const std::vector<cplx>& bethe_energies,
                                  const SpectrumResult& ed, double tol);

}  // namespace spinchain
