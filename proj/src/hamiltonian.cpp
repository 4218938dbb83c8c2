#include "spinchain/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace spinchain {

namespace {

int wrap_site(int j, int n) { return (j - 1) % n + 1; }

void append_exchange(std::vector<PauliTerm>& terms, cplx cxy, cplx czz, int si, int sj) {
  using enum PauliAxis;
  if (cxy != cplx(0.0)) {
    terms.push_back({cxy, {{si, X}, {sj, X}}});
    terms.push_back({cxy, {{si, Y}, {sj, Y}}});
  }
  if (czz != cplx(0.0)) terms.push_back({czz, {{si, Z}, {sj, Z}}});
}

}  // namespace

std::vector<PauliTerm> local_terms(cplx a, cplx eta, int n_sites) {
  if (n_sites < 4) throw std::invalid_argument("chain Hamiltonian needs n_sites >= 4");
  const cplx se = std::sin(eta);
  if (std::abs(se) < 1e-10)
    throw SingularAnisotropyError("sin(eta) below tolerance in Hamiltonian couplings");

  const cplx cos2a = std::cos(2.0 * a);
  const cplx sin2a = std::sin(2.0 * a);
  const cplx ce = std::cos(eta);
  const cplx c_nnn = -sin2a * sin2a * ce / (2.0 * se * se);

  std::vector<PauliTerm> terms;
  terms.reserve(static_cast<size_t>(n_sites) * 12);
  for (int j = 1; j <= n_sites; ++j) {
    const int s1 = j;
    const int s2 = wrap_site(j + 1, n_sites);
    const int s3 = wrap_site(j + 2, n_sites);
    const double stagger = (j % 2 == 0) ? 1.0 : -1.0;

    append_exchange(terms, cos2a, ce, s1, s2);
    append_exchange(terms, c_nnn, c_nnn, s1, s3);

    const cplx chi = stagger * iu * sin2a / (2.0 * se);
    if (chi != cplx(0.0)) {
      // chi * cos(eta) * s_{j+1} . (s_j x s_{j+2})
      for (auto& t : scalar_chirality_terms(chi * ce, s2, s1, s3)) terms.push_back(std::move(t));
      // chi * (cos 2a - cos eta) * sigma^z_{j+1} (sx_j sy_{j+2} - sy_j sx_{j+2})
      const cplx cz = chi * (cos2a - ce);
      using enum PauliAxis;
      terms.push_back({cz, {{s2, Z}, {s1, X}, {s3, Y}}});
      terms.push_back({-cz, {{s2, Z}, {s1, Y}, {s3, X}}});
    }
  }
  return terms;
}

std::vector<PauliTerm> local_terms(const ModelParams& p) {
  return local_terms(p.a_c(), p.eta_c(), p.n_sites);
}

double hermiticity_defect(const Matrix& m) { return max_abs(m - m.adjoint()); }

HamiltonianBuild build_direct(const ModelParams& p) {
  HamiltonianBuild h;
  h.matrix = dense_from_terms(local_terms(p), p.n_sites);
  h.params = p;
  h.hermiticity_defect = hermiticity_defect(h.matrix);
  h.hermitian = h.hermiticity_defect < 1e-12;
  return h;
}

Matrix build_raw(double a, double eta, int n_sites) {
  return dense_from_terms(local_terms(cplx(a), cplx(eta), n_sites), n_sites);
}

Matrix build_isotropic_limit(double abar, int n_sites) {
  if (n_sites < 4) throw std::invalid_argument("chain Hamiltonian needs n_sites >= 4");
  std::vector<PauliTerm> terms;
  for (int j = 1; j <= n_sites; ++j) {
    const int s1 = j;
    const int s2 = wrap_site(j + 1, n_sites);
    const int s3 = wrap_site(j + 2, n_sites);
    const double stagger = (j % 2 == 0) ? 1.0 : -1.0;
    append_exchange(terms, 1.0, 1.0, s1, s2);
    const cplx c2 = -2.0 * abar * abar;
    append_exchange(terms, c2, c2, s1, s3);
    if (abar != 0.0)
      for (auto& t : scalar_chirality_terms(stagger * iu * abar, s2, s1, s3))
        terms.push_back(std::move(t));
  }
  return dense_from_terms(terms, n_sites);
}

SymmetryCheck symmetry_identity_check(double a, double eta, int n_sites) {
  SymmetryCheck c{};
  c.shift_residual = max_abs(build_raw(a, pi + eta, n_sites) - build_raw(pi - a, pi - eta, n_sites));
  c.period_residual = max_abs(build_raw(a, eta, n_sites) - build_raw(pi + a, eta, n_sites));
  return c;
}

std::vector<uint64_t> sector_basis(int n_sites, int n_down) {
  std::vector<uint64_t> basis;
  const uint64_t dim = uint64_t{1} << n_sites;
  for (uint64_t s = 0; s < dim; ++s)
    if (std::popcount(s) == n_down) basis.push_back(s);
  return basis;
}

Matrix build_sector(const std::vector<PauliTerm>& terms, int n_sites, int n_down) {
  const std::vector<uint64_t> basis = sector_basis(n_sites, n_down);
  std::unordered_map<uint64_t, int> index;
  index.reserve(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

  Matrix m = Matrix::Zero(basis.size(), basis.size());
  std::unordered_map<uint64_t, cplx> column;
  for (size_t c = 0; c < basis.size(); ++c) {
    column.clear();
    for (const PauliTerm& t : terms) {
      auto [r, amp] = apply_term(t, basis[c], n_sites);
      column[r] += amp;
    }
    for (auto& [r, amp] : column) {
      auto it = index.find(r);
      if (it != index.end()) {
        m(it->second, static_cast<Eigen::Index>(c)) += amp;
      }
      // Out-of-sector amplitudes cancel exactly between the xx/yy and the
      // paired chiral strings; nothing to record.
    }
  }
  return m;
}

double sector_ground_energy(const ModelParams& p, int n_down) {
  if (!p.hermitian_regime())
    throw std::invalid_argument("sector ground energy requires a hermitian regime");
  const Matrix m = build_sector(local_terms(p), p.n_sites, n_down);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("sector eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

double ground_energy(const ModelParams& p) {
  // Sectors n_down and n_sites - n_down are degenerate (global spin flip
  // commutes with every coupling), so scanning n_down <= N covers everything.
  double e = std::numeric_limits<double>::infinity();
  for (int n_down = 0; n_down <= p.half_sites(); ++n_down)
    e = std::min(e, sector_ground_energy(p, n_down));
  return e;
}

}  // namespace spinchain
