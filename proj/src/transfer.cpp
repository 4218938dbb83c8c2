#include "spinchain/transfer.hpp"

#include <cmath>

#include "spinchain/spin_algebra.hpp"

namespace spinchain {

namespace {

// R_{aux,site}(u) with the auxiliary space mapped to tensor slot `aux_slot`
// of an (n_extra + n_sites)-site space; chain site j sits at slot n_extra + j.
Matrix r_factor(cplx u, cplx eta, int aux_slot, int site, int n_extra, int n_sites,
                bool derivative = false) {
  const Matrix4 block = derivative ? r_matrix_derivative(u, eta) : r_matrix(u, eta);
  return embed_two_site(block, aux_slot, n_extra + site, n_extra + n_sites);
}

double site_shift_sign(int site) { return (site % 2 == 1) ? 1.0 : -1.0; }

Matrix ordered_product(cplx u, const ModelParams& p, int aux_slot, int n_extra,
                       int derivative_site /* 0 = none */) {
  const cplx eta = p.eta_c();
  const cplx a = p.a_c();
  const int n = p.n_sites;
  const Eigen::Index dim = Eigen::Index{1} << (n_extra + n);
  Matrix t = Matrix::Identity(dim, dim);
  for (int j = 1; j <= n; ++j) {
    const cplx arg = u + site_shift_sign(j) * a;
    t = t * r_factor(arg, eta, aux_slot, j, n_extra, n, j == derivative_site);
  }
  return t;
}

Matrix ordered_product_hat(cplx u, const ModelParams& p) {
  const cplx eta = p.eta_c();
  const cplx a = p.a_c();
  const int n = p.n_sites;
  const Eigen::Index dim = Eigen::Index{1} << (1 + n);
  Matrix t = Matrix::Identity(dim, dim);
  // Sites in descending order; even sites carry u + a here.
  for (int j = n; j >= 1; --j) {
    const cplx arg = u - site_shift_sign(j) * a;
    t = t * r_factor(arg, eta, 1, j, 1, n);
  }
  return t;
}

// Partial trace over the auxiliary slot (slowest factor).
Matrix trace_aux(const Matrix& t) {
  const Eigen::Index d = t.rows() / 2;
  return t.topLeftCorner(d, d) + t.bottomRightCorner(d, d);
}

}  // namespace

Matrix monodromy(cplx u, const ModelParams& p) { return ordered_product(u, p, 1, 1, 0); }

Matrix monodromy_hat(cplx u, const ModelParams& p) { return ordered_product_hat(u, p); }

MonodromyBlocks monodromy_blocks(cplx u, const ModelParams& p) {
  const Matrix t = monodromy(u, p);
  const Eigen::Index d = t.rows() / 2;
  MonodromyBlocks blocks;
  blocks.a = t.topLeftCorner(d, d);
  blocks.b = t.topRightCorner(d, d);
  blocks.c = t.bottomLeftCorner(d, d);
  blocks.d = t.bottomRightCorner(d, d);
  return blocks;
}

Matrix transfer(cplx u, const ModelParams& p) { return trace_aux(monodromy(u, p)); }

Matrix transfer_hat(cplx u, const ModelParams& p) { return trace_aux(monodromy_hat(u, p)); }

Matrix transfer_derivative(cplx u, const ModelParams& p) {
  const cplx eta = p.eta_c();
  const cplx a = p.a_c();
  const int n = p.n_sites;
  const Eigen::Index dim = Eigen::Index{1} << (1 + n);

  std::vector<Matrix> factors(n);
  for (int j = 1; j <= n; ++j)
    factors[j - 1] = r_factor(u + site_shift_sign(j) * a, eta, 1, j, 1, n);

  std::vector<Matrix> prefix(n + 1), suffix(n + 1);
  prefix[0] = Matrix::Identity(dim, dim);
  for (int j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * factors[j];
  suffix[n] = Matrix::Identity(dim, dim);
  for (int j = n - 1; j >= 0; --j) suffix[j] = factors[j] * suffix[j + 1];

  Matrix dt = Matrix::Zero(dim, dim);
  for (int j = 1; j <= n; ++j) {
    const Matrix dfactor = r_factor(u + site_shift_sign(j) * a, eta, 1, j, 1, n, true);
    dt += prefix[j - 1] * dfactor * suffix[j];
  }
  return trace_aux(dt);
}

cplx vacuum_a(cplx u, const ModelParams& p) {
  const cplx eta = p.eta_c();
  const cplx a = p.a_c();
  const int half = p.half_sites();
  return std::pow(std::sin(u + a + eta) * std::sin(u - a + eta), half) /
         std::pow(std::sin(eta), p.n_sites);
}

cplx vacuum_d(cplx u, const ModelParams& p) {
  const cplx eta = p.eta_c();
  const cplx a = p.a_c();
  const int half = p.half_sites();
  return std::pow(std::sin(u + a) * std::sin(u - a), half) / std::pow(std::sin(eta), p.n_sites);
}

double rtt_residual(cplx u, cplx v, const ModelParams& p) {
  const cplx eta = p.eta_c();
  const int n = p.n_sites;
  // Two auxiliary slots (1 and 2) in front of the chain.
  const Matrix t1 = ordered_product(u, p, 1, 2, 0);
  const Matrix t2 = ordered_product(v, p, 2, 2, 0);
  const Matrix r12 = embed_two_site(r_matrix(u - v, eta), 1, 2, 2 + n);
  return max_abs(r12 * t1 * t2 - t2 * t1 * r12);
}

Matrix hamiltonian_from_transfer(const ModelParams& p) {
  const cplx eta = p.eta_c();
  const cplx a = p.a_c();
  const int half = p.half_sites();

  const cplx phi2a = phi_factor(2.0 * a, eta);
  if (std::abs(phi2a) < 1e-12)
    throw ResonantInhomogeneityError("phi(2a) vanishes; transfer construction is singular");

  const cplx se = std::sin(eta);
  const cplx cos2a = std::cos(2.0 * a);
  const cplx constant =
      -double(half) * std::cos(eta) * (cos2a * cos2a - std::cos(2.0 * eta)) / (se * se);

  // phi(2a)^{1-N} via an integer power to avoid complex pow branch issues.
  cplx prefactor = 1.0;
  for (int k = 0; k < half - 1; ++k) prefactor /= phi2a;

  const Matrix that_minus = transfer_hat(-a, p);
  const Matrix that_plus = transfer_hat(a, p);
  const Matrix dt_plus = transfer_derivative(a, p);
  const Matrix dt_minus = transfer_derivative(-a, p);

  Matrix h = prefactor * se * (that_minus * dt_plus + that_plus * dt_minus);
  h += constant * Matrix::Identity(h.rows(), h.cols());
  return h;
}

cplx transfer_eigenvalue(cplx u, const std::vector<cplx>& lambdas, const ModelParams& p) {
  const cplx eta = p.eta_c();
  cplx prod_a = 1.0, prod_d = 1.0;
  for (const cplx& l : lambdas) {
    const cplx den = std::sin(u - l);
    if (std::abs(den) < 1e-12)
      throw RootCollisionError("transfer_eigenvalue evaluated at a Bethe-root pole");
    prod_a *= std::sin(u - l - eta) / den;
    prod_d *= std::sin(u - l + eta) / den;
  }
  return vacuum_a(u, p) * prod_a + vacuum_d(u, p) * prod_d;
}

}  // namespace spinchain
