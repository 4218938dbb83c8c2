#pragma once

#include <vector>

#include "spinchain/types.hpp"

namespace spinchain {

// Tensor-space conventions used throughout:
//   * sites are 1-based, site 1 is the first (slowest) tensor factor;
//   * a basis index c encodes site j in bit (n_sites - j), so the two-site
//     basis is ordered |00>, |01>, |10>, |11>;
//   * |0> = spin up, sigma^z |0> = +|0>.

enum class PauliAxis { X, Y, Z };

Matrix2 pauli(PauliAxis axis);

// sigma^axis acting on `site` of an n_sites chain, identity elsewhere.
// Validates the chain contract (n_sites even); internal helpers below do not.
Matrix pauli_embed(PauliAxis axis, int site, int n_sites);

// A product of single-site Paulis on distinct sites, scaled by coeff.
struct PauliOp {
  int site;
  PauliAxis axis;
};
struct PauliTerm {
  cplx coeff;
  std::vector<PauliOp> ops;
};

// Accumulate coeff * prod_ops sigma into a dense matrix (no parity checks).
void add_term_dense(Matrix& m, const PauliTerm& term, int n_sites);
Matrix dense_from_terms(const std::vector<PauliTerm>& terms, int n_sites);

// Apply a term to a basis state: returns the image index and amplitude.
std::pair<uint64_t, cplx> apply_term(const PauliTerm& term, uint64_t state, int n_sites);

// Embed a 4x4 two-site operator acting on (site_i, site_j); site_i is the
// first factor of the 4x4 block.
Matrix embed_two_site(const Matrix4& block, int site_i, int site_j, int n_sites);

// Two-site permutation in the |00>,|01>,|10>,|11> basis.
Matrix4 permutation_p();

// Trigonometric six-vertex R-matrix; diagonal sin(u+eta)/sin(eta), middle
// block [[sin u, sin eta], [sin eta, sin u]] / sin(eta).
Matrix4 r_matrix(cplx u, cplx eta);

// Analytic derivative dR/du: purely diagonal, cos(u+eta) resp. cos(u) over
// sin(eta).
Matrix4 r_matrix_derivative(cplx u, cplx eta);

// phi(u) = -sin(u+eta) sin(u-eta) / sin^2(eta), the unitarity scalar.
cplx phi_factor(cplx u, cplx eta);

// Max-norm of LHS - RHS of the Yang-Baxter equation realized on 8x8 matrices.
double verify_ybe(cplx u1, cplx u2, cplx u3, cplx eta);

struct RPropertyReport {
  double initial_condition;
  double unitarity;
  double crossing;
  double pt_symmetry;
  double max() const;
};

// Residuals of the four structural R-matrix identities at spectral point u.
RPropertyReport verify_r_properties(cplx u, cplx eta);

// || [P_{32}, P_{31}] - (i/2) vec{sigma}_3 . (vec{sigma}_2 x vec{sigma}_1) ||
// on a 3-site space.
double verify_permutation_commutator();

// Scalar chirality sum_{abc} eps_{abc} sigma^a_{sa} sigma^b_{sb} sigma^c_{sc}
// as Pauli terms (shared by the Hamiltonian builders and the checks above).
std::vector<PauliTerm> scalar_chirality_terms(cplx coeff, int sa, int sb, int sc);

double max_abs(const Matrix& m);

}  // namespace spinchain
