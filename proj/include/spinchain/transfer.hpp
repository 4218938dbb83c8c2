#pragma once

#include <vector>

#include "spinchain/types.hpp"

namespace spinchain {

// Inhomogeneous monodromy/transfer matrices. The auxiliary space is tensor
// factor 0 (slowest index); odd chain sites carry spectral shift u + a, even
// sites u - a. The conjugate family reverses the site order with even sites
// at u + a.

// Full monodromy on aux (x) quantum, dimension 2 * 2^{n_sites}.
Matrix monodromy(cplx u, const ModelParams& p);
Matrix monodromy_hat(cplx u, const ModelParams& p);

struct MonodromyBlocks {
  Matrix a, b, c, d;  // auxiliary-space matrix elements, quantum-space operators
};
MonodromyBlocks monodromy_blocks(cplx u, const ModelParams& p);

Matrix transfer(cplx u, const ModelParams& p);
Matrix transfer_hat(cplx u, const ModelParams& p);

// d t(u)/du assembled with the analytic R-matrix derivative (product rule).
Matrix transfer_derivative(cplx u, const ModelParams& p);

// Vacuum eigenvalues of the diagonal monodromy blocks.
cplx vacuum_a(cplx u, const ModelParams& p);
cplx vacuum_d(cplx u, const ModelParams& p);

// || R_{12}(u-v) T_1(u) T_2(v) - T_2(v) T_1(u) R_{12}(u-v) ||_max
double rtt_residual(cplx u, cplx v, const ModelParams& p);

// Hamiltonian reconstructed from the transfer-matrix family.
Matrix hamiltonian_from_transfer(const ModelParams& p);

// Transfer-matrix eigenvalue functional on Bethe roots (lambda parametrized):
// Lambda(u) = a(u) prod sin(u - l_j - eta)/sin(u - l_j)
//           + d(u) prod sin(u - l_j + eta)/sin(u - l_j).
cplx transfer_eigenvalue(cplx u, const std::vector<cplx>& lambdas, const ModelParams& p);

}  // namespace spinchain
