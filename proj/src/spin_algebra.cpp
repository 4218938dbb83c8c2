#include "spinchain/spin_algebra.hpp"

#include <cmath>

namespace spinchain {

namespace {

constexpr double kSinEtaTol = 1e-10;

void check_anisotropy(cplx eta) {
  if (std::abs(std::sin(eta)) < kSinEtaTol)
    throw SingularAnisotropyError("sin(eta) below tolerance; R-matrix is singular");
}

int site_bit(int site, int n_sites) { return n_sites - site; }

}  // namespace

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix2 pauli(PauliAxis axis) {
  Matrix2 m = Matrix2::Zero();
  switch (axis) {
    case PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::Y:
      m(0, 1) = -iu;
      m(1, 0) = iu;
      break;
    case PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

std::pair<uint64_t, cplx> apply_term(const PauliTerm& term, uint64_t state, int n_sites) {
  uint64_t out = state;
  cplx amp = term.coeff;
  for (const PauliOp& op : term.ops) {
    const uint64_t mask = uint64_t{1} << site_bit(op.site, n_sites);
    const bool down = (out & mask) != 0;  // bit 1 = spin down
    switch (op.axis) {
      case PauliAxis::X:
        out ^= mask;
        break;
      case PauliAxis::Y:
        // sigma^y |0> = i |1>, sigma^y |1> = -i |0>
        amp *= down ? -iu : iu;
        out ^= mask;
        break;
      case PauliAxis::Z:
        amp *= down ? -1.0 : 1.0;
        break;
    }
  }
  return {out, amp};
}

void add_term_dense(Matrix& m, const PauliTerm& term, int n_sites) {
  const int64_t dim = int64_t{1} << n_sites;
  for (int64_t c = 0; c < dim; ++c) {
    auto [r, amp] = apply_term(term, static_cast<uint64_t>(c), n_sites);
    m(static_cast<Eigen::Index>(r), c) += amp;
  }
}

Matrix dense_from_terms(const std::vector<PauliTerm>& terms, int n_sites) {
  const int64_t dim = int64_t{1} << n_sites;
  Matrix m = Matrix::Zero(dim, dim);
  for (const PauliTerm& t : terms) add_term_dense(m, t, n_sites);
  return m;
}

Matrix pauli_embed(PauliAxis axis, int site, int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::invalid_argument("pauli_embed: n_sites must be even and >= 2");
  if (site < 1 || site > n_sites)
    throw std::invalid_argument("pauli_embed: site out of range");
  return dense_from_terms({PauliTerm{1.0, {{site, axis}}}}, n_sites);
}

Matrix embed_two_site(const Matrix4& block, int site_i, int site_j, int n_sites) {
  const int64_t dim = int64_t{1} << n_sites;
  Matrix m = Matrix::Zero(dim, dim);
  const uint64_t mi = uint64_t{1} << site_bit(site_i, n_sites);
  const uint64_t mj = uint64_t{1} << site_bit(site_j, n_sites);
  for (int64_t c = 0; c < dim; ++c) {
    const int bi = (c & mi) ? 1 : 0;
    const int bj = (c & mj) ? 1 : 0;
    const int col = 2 * bi + bj;
    for (int row = 0; row < 4; ++row) {
      const cplx v = block(row, col);
      if (v == cplx(0.0)) continue;
      uint64_t r = static_cast<uint64_t>(c);
      r = (row & 2) ? (r | mi) : (r & ~mi);
      r = (row & 1) ? (r | mj) : (r & ~mj);
      m(static_cast<Eigen::Index>(r), c) += v;
    }
  }
  return m;
}

Matrix4 permutation_p() {
  Matrix4 p = Matrix4::Zero();
  p(0, 0) = 1.0;
  p(1, 2) = 1.0;
  p(2, 1) = 1.0;
  p(3, 3) = 1.0;
  return p;
}

Matrix4 r_matrix(cplx u, cplx eta) {
  check_anisotropy(eta);
  const cplx se = std::sin(eta);
  const cplx diag = std::sin(u + eta) / se;
  const cplx mid = std::sin(u) / se;
  Matrix4 r = Matrix4::Zero();
  r(0, 0) = diag;
  r(1, 1) = mid;
  r(1, 2) = 1.0;
  r(2, 1) = 1.0;
  r(2, 2) = mid;
  r(3, 3) = diag;
  return r;
}

Matrix4 r_matrix_derivative(cplx u, cplx eta) {
  check_anisotropy(eta);
  const cplx se = std::sin(eta);
  const cplx diag = std::cos(u + eta) / se;
  const cplx mid = std::cos(u) / se;
  Matrix4 r = Matrix4::Zero();
  r(0, 0) = diag;
  r(1, 1) = mid;
  r(2, 2) = mid;
  r(3, 3) = diag;
  return r;
}

cplx phi_factor(cplx u, cplx eta) {
  check_anisotropy(eta);
  const cplx se = std::sin(eta);
  return -std::sin(u + eta) * std::sin(u - eta) / (se * se);
}

double verify_ybe(cplx u1, cplx u2, cplx u3, cplx eta) {
  const Matrix r12 = embed_two_site(r_matrix(u1 - u2, eta), 1, 2, 3);
  const Matrix r13 = embed_two_site(r_matrix(u1 - u3, eta), 1, 3, 3);
  const Matrix r23 = embed_two_site(r_matrix(u2 - u3, eta), 2, 3, 3);
  return max_abs(r12 * r13 * r23 - r23 * r13 * r12);
}

namespace {

// Partial transposition in the first factor of a 4x4 two-site operator.
Matrix4 transpose_first(const Matrix4& m) {
  Matrix4 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) t(2 * i + j, 2 * k + l) = m(2 * k + j, 2 * i + l);
  return t;
}

}  // namespace

double RPropertyReport::max() const {
  return std::max(std::max(initial_condition, unitarity), std::max(crossing, pt_symmetry));
}

RPropertyReport verify_r_properties(cplx u, cplx eta) {
  const Matrix4 p = permutation_p();
  const Matrix4 r = r_matrix(u, eta);

  RPropertyReport rep{};
  rep.initial_condition = (r_matrix(0.0, eta) - p).cwiseAbs().maxCoeff();

  // R_{j,0}(-u) is R(-u) with its two spaces swapped.
  const Matrix4 r_swapped = p * r_matrix(-u, eta) * p;
  const Matrix4 unit = r * r_swapped - phi_factor(u, eta) * Matrix4::Identity();
  rep.unitarity = unit.cwiseAbs().maxCoeff();

  Matrix4 sy0 = Matrix4::Zero();
  sy0.block<2, 2>(0, 2) = -iu * Matrix2::Identity();
  sy0.block<2, 2>(2, 0) = iu * Matrix2::Identity();
  const Matrix4 crossed = -sy0 * transpose_first(r_matrix(-u - eta, eta)) * sy0;
  rep.crossing = (r - crossed).cwiseAbs().maxCoeff();

  const double swap_resid = (r - p * r * p).cwiseAbs().maxCoeff();
  const double transpose_resid = (r - r.transpose()).cwiseAbs().maxCoeff();
  rep.pt_symmetry = std::max(swap_resid, transpose_resid);
  return rep;
}

std::vector<PauliTerm> scalar_chirality_terms(cplx coeff, int sa, int sb, int sc) {
  using enum PauliAxis;
  std::vector<PauliTerm> terms;
  const PauliAxis ax[3] = {X, Y, Z};
  // eps_{abc} sigma^a_{sa} sigma^b_{sb} sigma^c_{sc}
  const int even[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const int odd[3][3] = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (auto& idx : even)
    terms.push_back({coeff, {{sa, ax[idx[0]]}, {sb, ax[idx[1]]}, {sc, ax[idx[2]]}}});
  for (auto& idx : odd)
    terms.push_back({-coeff, {{sa, ax[idx[0]]}, {sb, ax[idx[1]]}, {sc, ax[idx[2]]}}});
  return terms;
}

double verify_permutation_commutator() {
  // Three sites; the pair operators P_{3,2} and P_{3,1} with
  // P = (1 + vec{sigma}.vec{sigma}) / 2.
  const int n = 3;
  const Matrix4 p = permutation_p();
  const Matrix p32 = embed_two_site(p, 3, 2, n);
  const Matrix p31 = embed_two_site(p, 3, 1, n);
  const Matrix lhs = p32 * p31 - p31 * p32;
  const Matrix rhs = dense_from_terms(scalar_chirality_terms(0.5 * iu, 3, 2, 1), n);
  return max_abs(lhs - rhs);
}

}  // namespace spinchain
