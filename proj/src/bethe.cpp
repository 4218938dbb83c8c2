#include "spinchain/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace spinchain {

namespace {

double wrap_into(double x, double lo, double period) {
  return x - period * std::floor((x - lo) / period);
}

bool sinh_type(BaeFamily f) {
  return f == BaeFamily::RealEtaU || f == BaeFamily::NonHermitianU;
}

// Shift data for the u-parametrized families:
//   [ s(u-c_n1) s(u-c_n2) / (s(u-c_d1) s(u-c_d2)) ]^N
//     = prod_{l != j} s(u_j - u_l - d) / s(u_j - u_l + d)
// with s(x) = sinh(x/2) (real-eta / nonhermitian) or sin(x/2) (imag-eta).
struct FamilySpec {
  bool use_sinh;
  cplx c_n1, c_n2, c_d1, c_d2, d;
  int half_sites;

  cplx s(cplx x) const { return use_sinh ? std::sinh(0.5 * x) : std::sin(0.5 * x); }
  cplx ds(cplx x) const {
    return 0.5 * (use_sinh ? std::cosh(0.5 * x) : std::cos(0.5 * x));
  }
};

FamilySpec family_spec(BaeFamily family, const ModelParams& p) {
  FamilySpec spec{};
  spec.half_sites = p.half_sites();
  if (family == BaeFamily::ImagEtaU) {
    const cplx ig(0.0, p.gamma);
    spec.use_sinh = false;
    spec.c_n1 = 2.0 * p.a + ig;
    spec.c_n2 = -2.0 * p.a + ig;
    spec.c_d1 = 2.0 * p.a - ig;
    spec.c_d2 = -2.0 * p.a - ig;
    spec.d = 2.0 * ig;
  } else {
    const cplx a = p.a_c();
    const cplx eta = p.eta_c();
    spec.use_sinh = true;
    spec.c_n1 = iu * (2.0 * a + eta);
    spec.c_n2 = -iu * (2.0 * a - eta);
    spec.c_d1 = -iu * (2.0 * a + eta);
    spec.c_d2 = iu * (2.0 * a - eta);
    spec.d = 2.0 * iu * eta;
  }
  return spec;
}

void check_collisions(const std::vector<cplx>& roots, BaeFamily family, double tol) {
  for (size_t j = 0; j < roots.size(); ++j)
    for (size_t l = j + 1; l < roots.size(); ++l) {
      const cplx a = canonical_root(roots[j], family);
      const cplx b = canonical_root(roots[l], family);
      double dre = a.real() - b.real(), dim = a.imag() - b.imag();
      if (sinh_type(family) || family == BaeFamily::RationalLambda) {
        const double period = family == BaeFamily::RationalLambda ? pi : 2.0 * pi;
        if (family == BaeFamily::RationalLambda)
          dre = std::remainder(dre, period);
        else
          dim = std::remainder(dim, period);
      } else {
        dre = std::remainder(dre, 2.0 * pi);
      }
      if (std::hypot(dre, dim) < tol)
        throw RootCollisionError("coinciding Bethe roots make the equations singular");
    }
}

std::vector<cplx> residual_rational(const std::vector<cplx>& lam, const ModelParams& p) {
  const cplx a = p.a_c();
  const cplx eta = p.eta_c();
  const int N = p.half_sites();
  const int M = static_cast<int>(lam.size());
  std::vector<cplx> out(M);
  for (int j = 0; j < M; ++j) {
    const cplx num = std::sin(lam[j] + a + eta) * std::sin(lam[j] - a + eta);
    const cplx den = std::sin(lam[j] + a) * std::sin(lam[j] - a);
    cplx lhs = 1.0;
    for (int k = 0; k < N; ++k) lhs *= num / den;
    cplx rhs = 1.0;
    for (int l = 0; l < M; ++l) {
      if (l == j) continue;
      rhs *= std::sin(lam[j] - lam[l] + eta) / std::sin(lam[j] - lam[l] - eta);
    }
    out[j] = lhs - rhs;
  }
  return out;
}

std::vector<cplx> residual_u_family(const std::vector<cplx>& u, const FamilySpec& spec) {
  const int M = static_cast<int>(u.size());
  std::vector<cplx> out(M);
  for (int j = 0; j < M; ++j) {
    const cplx num = spec.s(u[j] - spec.c_n1) * spec.s(u[j] - spec.c_n2);
    const cplx den = spec.s(u[j] - spec.c_d1) * spec.s(u[j] - spec.c_d2);
    cplx lhs = 1.0;
    for (int k = 0; k < spec.half_sites; ++k) lhs *= num / den;
    cplx rhs = 1.0;
    for (int l = 0; l < M; ++l) {
      if (l == j) continue;
      rhs *= spec.s(u[j] - u[l] - spec.d) / spec.s(u[j] - u[l] + spec.d);
    }
    out[j] = lhs - rhs;
  }
  return out;
}

}  // namespace

BaeFamily family_for(const ModelParams& p) {
  switch (p.regime) {
    case Regime::RealEtaHermitian: return BaeFamily::RealEtaU;
    case Regime::ImagEtaHermitian: return BaeFamily::ImagEtaU;
    case Regime::NonHermitian: return BaeFamily::NonHermitianU;
  }
  return BaeFamily::RealEtaU;
}

cplx canonical_root(cplx u, BaeFamily family) {
  if (family == BaeFamily::RationalLambda)
    return {wrap_into(u.real(), -0.5 * pi, pi), u.imag()};
  if (sinh_type(family)) return {u.real(), wrap_into(u.imag(), -pi, 2.0 * pi)};
  return {wrap_into(u.real(), -pi, 2.0 * pi), u.imag()};
}

double root_set_distance(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         BaeFamily family) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  auto dist = [&](cplx x, cplx y) {
    double dre = x.real() - y.real(), dim = x.imag() - y.imag();
    if (family == BaeFamily::RationalLambda)
      dre = std::remainder(dre, pi);
    else if (sinh_type(family))
      dim = std::remainder(dim, 2.0 * pi);
    else
      dre = std::remainder(dre, 2.0 * pi);
    return std::hypot(dre, dim);
  };
  double worst = 0.0;
  for (const cplx& x : a) {
    double best = std::numeric_limits<double>::infinity();
    size_t best_i = b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      const double d = dist(x, b[i]);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    if (best_i == b.size()) return std::numeric_limits<double>::infinity();
    used[best_i] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<cplx> bae_residual(const BetheRoots& roots, const ModelParams& p) {
  check_collisions(roots.roots, roots.family, 1e-10);
  if (roots.family == BaeFamily::RationalLambda) return residual_rational(roots.roots, p);
  const BaeFamily expected = family_for(p);
  if (roots.family != expected)
    throw std::invalid_argument("Bethe root parametrization does not match the regime");
  return residual_u_family(roots.roots, family_spec(roots.family, p));
}

double bae_residual_max(const BetheRoots& roots, const ModelParams& p) {
  if (roots.roots.empty()) return 0.0;
  double m = 0.0;
  for (const cplx& r : bae_residual(roots, p)) m = std::max(m, std::abs(r));
  return m;
}

double theta_fn(int n, double x, double eta) {
  const double t = std::tan(0.5 * n * eta);
  if (std::abs(t) < 1e-12)
    throw SingularAnisotropyError("tan(n eta / 2) vanishes; log-form kernel undefined");
  return 2.0 * std::atan(std::tanh(0.5 * x) / t);
}

namespace {

// theta_n'(x) = sin(n eta) / (cosh x - cos(n eta))
double theta_fn_deriv(int n, double x, double eta) {
  return std::sin(n * eta) / (std::cosh(x) - std::cos(n * eta));
}

}  // namespace

std::vector<double> bae_log_residual(const std::vector<double>& u, const std::vector<double>& qn,
                                     const ModelParams& p) {
  if (p.regime != Regime::RealEtaHermitian)
    throw std::invalid_argument("log-form equations apply to the real-eta regime only");
  if (u.size() != qn.size())
    throw std::invalid_argument("roots and quantum numbers must have equal length");
  const int N = p.half_sites();
  const double b2 = 2.0 * p.b;
  std::vector<double> out(u.size());
  for (size_t j = 0; j < u.size(); ++j) {
    double v = N * (theta_fn(1, u[j] + b2, p.eta) + theta_fn(1, u[j] - b2, p.eta)) -
               2.0 * pi * qn[j];
    for (size_t k = 0; k < u.size(); ++k) v -= theta_fn(2, u[j] - u[k], p.eta);
    out[j] = v;
  }
  return out;
}

double counting_function(double u, const BetheRoots& roots, const ModelParams& p) {
  if (p.regime != Regime::RealEtaHermitian)
    throw std::invalid_argument("counting function applies to the real-eta regime only");
  const double b2 = 2.0 * p.b;
  double z = theta_fn(1, u + b2, p.eta) + theta_fn(1, u - b2, p.eta);
  double sum = 0.0;
  for (const cplx& r : roots.roots) sum += theta_fn(2, u - r.real(), p.eta);
  z -= sum / p.half_sites();
  return z / (4.0 * pi);
}

namespace {

// ---- damped Newton on the pole-free (cleared) form of the u-family BAEs ----

struct ClearedEval {
  std::vector<cplx> f;
  double scale;
};

ClearedEval cleared_residual(const std::vector<cplx>& u, const FamilySpec& spec) {
  const int M = static_cast<int>(u.size());
  ClearedEval ev;
  ev.f.resize(M);
  ev.scale = 1.0;
  for (int j = 0; j < M; ++j) {
    cplx num_pow = 1.0, den_pow = 1.0;
    const cplx num = spec.s(u[j] - spec.c_n1) * spec.s(u[j] - spec.c_n2);
    const cplx den = spec.s(u[j] - spec.c_d1) * spec.s(u[j] - spec.c_d2);
    for (int k = 0; k < spec.half_sites; ++k) {
      num_pow *= num;
      den_pow *= den;
    }
    cplx plus = 1.0, minus = 1.0;
    for (int l = 0; l < M; ++l) {
      if (l == j) continue;
      plus *= spec.s(u[j] - u[l] + spec.d);
      minus *= spec.s(u[j] - u[l] - spec.d);
    }
    ev.f[j] = num_pow * plus - den_pow * minus;
    ev.scale = std::max(ev.scale, std::abs(num_pow * plus) + std::abs(den_pow * minus));
  }
  return ev;
}

Eigen::MatrixXcd cleared_jacobian(const std::vector<cplx>& u, const FamilySpec& spec) {
  const int M = static_cast<int>(u.size());
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(M, M);
  for (int j = 0; j < M; ++j) {
    const cplx n1 = spec.s(u[j] - spec.c_n1), n2 = spec.s(u[j] - spec.c_n2);
    const cplx d1 = spec.s(u[j] - spec.c_d1), d2 = spec.s(u[j] - spec.c_d2);
    const cplx num = n1 * n2, den = d1 * d2;
    cplx num_pm1 = 1.0, den_pm1 = 1.0;  // num^{N-1}, den^{N-1}
    for (int k = 0; k < spec.half_sites - 1; ++k) {
      num_pm1 *= num;
      den_pm1 *= den;
    }
    const cplx num_pow = num_pm1 * num, den_pow = den_pm1 * den;
    const cplx dnum = spec.ds(u[j] - spec.c_n1) * n2 + n1 * spec.ds(u[j] - spec.c_n2);
    const cplx dden = spec.ds(u[j] - spec.c_d1) * d2 + d1 * spec.ds(u[j] - spec.c_d2);
    const cplx num_pow_d = double(spec.half_sites) * num_pm1 * dnum;
    const cplx den_pow_d = double(spec.half_sites) * den_pm1 * dden;

    cplx plus = 1.0, minus = 1.0;
    for (int l = 0; l < M; ++l) {
      if (l == j) continue;
      plus *= spec.s(u[j] - u[l] + spec.d);
      minus *= spec.s(u[j] - u[l] - spec.d);
    }
    cplx dplus = 0.0, dminus = 0.0;
    for (int l = 0; l < M; ++l) {
      if (l == j) continue;
      cplx pp = spec.ds(u[j] - u[l] + spec.d), pm = spec.ds(u[j] - u[l] - spec.d);
      for (int m = 0; m < M; ++m) {
        if (m == j || m == l) continue;
        pp *= spec.s(u[j] - u[m] + spec.d);
        pm *= spec.s(u[j] - u[m] - spec.d);
      }
      dplus += pp;
      dminus += pm;
    }
    jac(j, j) = num_pow_d * plus + num_pow * dplus - den_pow_d * minus - den_pow * dminus;

    for (int k = 0; k < M; ++k) {
      if (k == j) continue;
      cplx pp = -spec.ds(u[j] - u[k] + spec.d), pm = -spec.ds(u[j] - u[k] - spec.d);
      for (int m = 0; m < M; ++m) {
        if (m == j || m == k) continue;
        pp *= spec.s(u[j] - u[m] + spec.d);
        pm *= spec.s(u[j] - u[m] - spec.d);
      }
      jac(j, k) = num_pow * pp - den_pow * pm;
    }
  }
  return jac;
}

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

bool newton_cleared(std::vector<cplx>& u, const FamilySpec& spec, const SolveOptions& opt) {
  const int M = static_cast<int>(u.size());
  for (int it = 0; it < opt.max_iterations; ++it) {
    const ClearedEval ev = cleared_residual(u, spec);
    const double fnorm = norm2(ev.f);
    if (!std::isfinite(fnorm)) return false;
    double max_f = 0.0;
    for (const cplx& x : ev.f) max_f = std::max(max_f, std::abs(x));
    if (max_f < opt.newton_tol * ev.scale) return true;

    const Eigen::MatrixXcd jac = cleared_jacobian(u, spec);
    Eigen::VectorXcd rhs(M);
    for (int j = 0; j < M; ++j) rhs(j) = -ev.f[j];
    const Eigen::VectorXcd step = jac.partialPivLu().solve(rhs);
    if (!step.allFinite()) return false;

    double t = 1.0;
    bool advanced = false;
    for (int halving = 0; halving <= 30; ++halving) {
      std::vector<cplx> trial(u);
      for (int j = 0; j < M; ++j) trial[j] += t * step(j);
      const double trial_norm = norm2(cleared_residual(trial, spec).f);
      if (std::isfinite(trial_norm) && trial_norm < (1.0 - 1e-4 * t) * fnorm) {
        u = std::move(trial);
        advanced = true;
        break;
      }
      t *= 0.5;
    }
    if (!advanced) return false;
    for (const cplx& x : u) {
      const double runaway = spec.use_sinh ? std::abs(x.real()) : std::abs(x.imag());
      if (runaway > 60.0) return false;
    }
  }
  return false;
}

// ---- damped Newton on the log form (real roots, real-eta regime) ----

bool newton_log(std::vector<double>& u, const std::vector<double>& qn, const ModelParams& p,
                const SolveOptions& opt) {
  const int M = static_cast<int>(u.size());
  const int N = p.half_sites();
  const double b2 = 2.0 * p.b;
  auto residual = [&](const std::vector<double>& v) { return bae_log_residual(v, qn, p); };
  auto norm_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };

  for (int it = 0; it < opt.max_iterations; ++it) {
    const std::vector<double> f = residual(u);
    const double fnorm = norm_of(f);
    if (!std::isfinite(fnorm)) return false;
    double max_f = 0.0;
    for (double x : f) max_f = std::max(max_f, std::abs(x));
    if (max_f < opt.newton_tol * std::max(1.0, 2.0 * pi * N)) return true;

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(M, M);
    for (int j = 0; j < M; ++j) {
      jac(j, j) = N * (theta_fn_deriv(1, u[j] + b2, p.eta) + theta_fn_deriv(1, u[j] - b2, p.eta));
      for (int k = 0; k < M; ++k) {
        if (k == j) continue;
        const double w = theta_fn_deriv(2, u[j] - u[k], p.eta);
        jac(j, j) -= w;
        jac(j, k) += w;
      }
    }
    Eigen::VectorXd rhs(M);
    for (int j = 0; j < M; ++j) rhs(j) = -f[j];
    const Eigen::VectorXd step = jac.partialPivLu().solve(rhs);
    if (!step.allFinite()) return false;

    double t = 1.0;
    bool advanced = false;
    for (int halving = 0; halving <= 30; ++halving) {
      std::vector<double> trial(u);
      for (int j = 0; j < M; ++j) trial[j] += t * step(j);
      const double trial_norm = norm_of(residual(trial));
      if (std::isfinite(trial_norm) && trial_norm < (1.0 - 1e-4 * t) * fnorm) {
        u = std::move(trial);
        advanced = true;
        break;
      }
      t *= 0.5;
    }
    if (!advanced) return false;
    for (double x : u)
      if (std::abs(x) > 80.0) return false;
  }
  return false;
}

// Initial guess for one decoupled log equation N[th1(u+2b)+th1(u-2b)] = 2 pi I.
bool decoupled_init(double qn, const ModelParams& p, double& out) {
  const int N = p.half_sites();
  const double b2 = 2.0 * p.b;
  const double target = 2.0 * pi * qn / N;
  const double sup = 2.0 * (pi - p.eta);
  if (std::abs(target) >= sup - 1e-9) return false;
  double lo = -80.0, hi = 80.0;
  auto g = [&](double x) { return theta_fn(1, x + b2, p.eta) + theta_fn(1, x - b2, p.eta); };
  if (g(lo) > target || g(hi) < target) return false;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < target ? lo : hi) = mid;
  }
  out = 0.5 * (lo + hi);
  return true;
}

std::vector<std::vector<double>> quantum_number_tuples(int magnons, int half_sites) {
  // Strictly increasing tuples, |I| <= N/2, integers for odd M and
  // half-odd integers for even M.
  std::vector<double> values;
  const double offset = (magnons % 2 == 0) ? 0.5 : 0.0;
  for (double v = std::ceil(-0.5 * half_sites - offset) + offset; v <= 0.5 * half_sites + 1e-12;
       v += 1.0)
    if (std::abs(v) <= 0.5 * half_sites + 1e-12) values.push_back(v);

  std::vector<std::vector<double>> tuples;
  std::vector<int> idx(magnons);
  const int n = static_cast<int>(values.size());
  if (n < magnons) return tuples;
  for (int i = 0; i < magnons; ++i) idx[i] = i;
  while (true) {
    std::vector<double> tuple(magnons);
    for (int i = 0; i < magnons; ++i) tuple[i] = values[idx[i]];
    tuples.push_back(std::move(tuple));
    int i = magnons - 1;
    while (i >= 0 && idx[i] == n - magnons + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < magnons; ++k) idx[k] = idx[k - 1] + 1;
  }
  return tuples;
}

struct Candidate {
  std::vector<cplx> roots;
  std::vector<double> qn;
};

void finalize_candidate(Candidate cand, const ModelParams& p, BaeFamily family,
                        const SolveOptions& opt, std::vector<BetheRoots>& accepted) {
  for (cplx& r : cand.roots) r = canonical_root(r, family);
  std::sort(cand.roots.begin(), cand.roots.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  // Reject near-coinciding roots; they sit on the singular manifold.
  for (size_t j = 0; j + 1 < cand.roots.size(); ++j)
    for (size_t l = j + 1; l < cand.roots.size(); ++l)
      if (root_set_distance({cand.roots[j]}, {cand.roots[l]}, family) < 1e-6) return;

  BetheRoots sol;
  sol.family = family;
  sol.roots = std::move(cand.roots);
  sol.quantum_numbers = std::move(cand.qn);
  try {
    sol.residual = bae_residual_max(sol, p);
  } catch (const RootCollisionError&) {
    return;
  }
  if (!(sol.residual < opt.accept_tol)) return;

  for (const BetheRoots& prev : accepted)
    if (root_set_distance(prev.roots, sol.roots, family) < 1e-8) return;
  accepted.push_back(std::move(sol));
}

}  // namespace

std::vector<BetheRoots> solve_bae(const ModelParams& p, int magnons, const SolveOptions& opt) {
  if (magnons < 0 || magnons > p.half_sites())
    throw std::invalid_argument("magnon number must satisfy 0 <= M <= N");
  const BaeFamily family = family_for(p);
  std::vector<BetheRoots> accepted;

  if (magnons == 0) {
    BetheRoots vacuum;
    vacuum.family = family;
    vacuum.residual = 0.0;
    accepted.push_back(std::move(vacuum));
    return accepted;
  }

  // (i) real branches from the log form over admissible quantum numbers.
  if (opt.use_log_form && p.regime == Regime::RealEtaHermitian) {
    for (const auto& tuple : quantum_number_tuples(magnons, p.half_sites())) {
      std::vector<double> u(magnons);
      bool ok = true;
      for (int j = 0; j < magnons && ok; ++j) ok = decoupled_init(tuple[j], p, u[j]);
      if (!ok) continue;
      if (!newton_log(u, tuple, p, opt)) continue;
      Candidate cand;
      cand.roots.assign(u.begin(), u.end());
      cand.qn = tuple;
      finalize_candidate(std::move(cand), p, family, opt, accepted);
    }
  }

  const FamilySpec spec = family_spec(family, p);
  std::mt19937_64 rng(opt.rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_root = [&]() {
    if (spec.use_sinh)
      return cplx(16.0 * unit(rng) - 8.0, 2.0 * pi * unit(rng) - pi);
    return cplx(2.0 * pi * unit(rng) - pi, 8.0 * unit(rng) - 4.0);
  };

  // (ii) random complex seeds at the target parameters.
  if (opt.use_random_seeds) {
    for (int s = 0; s < opt.seeds; ++s) {
      std::vector<cplx> u(magnons);
      for (cplx& x : u) x = random_root();
      if (!newton_cleared(u, spec, opt)) continue;
      finalize_candidate({std::move(u), {}}, p, family, opt, accepted);
    }
  }

  // (iii) continuation in the inhomogeneity from the homogeneous point.
  const double target = p.inhomogeneity();
  if (opt.use_continuation && target != 0.0) {
    const ModelParams p0 = p.with_inhomogeneity(0.0);
    const FamilySpec spec0 = family_spec(family, p0);
    std::vector<std::vector<cplx>> base;
    for (int s = 0; s < opt.seeds; ++s) {
      std::vector<cplx> u(magnons);
      for (cplx& x : u) x = random_root();
      if (!newton_cleared(u, spec0, opt)) continue;
      bool fresh = true;
      for (const auto& known : base)
        if (root_set_distance(known, u, family) < 1e-8) fresh = false;
      if (fresh) base.push_back(std::move(u));
    }
    for (const auto& start : base) {
      std::vector<cplx> u = start;
      bool ok = true;
      for (int k = 1; k <= opt.continuation_steps && ok; ++k) {
        const ModelParams pk =
            p.with_inhomogeneity(target * double(k) / double(opt.continuation_steps));
        ok = newton_cleared(u, family_spec(family, pk), opt);
      }
      if (ok) finalize_candidate({std::move(u), {}}, p, family, opt, accepted);
    }
  }

  std::sort(accepted.begin(), accepted.end(), [](const BetheRoots& a, const BetheRoots& b) {
    const size_t n = std::min(a.roots.size(), b.roots.size());
    for (size_t i = 0; i < n; ++i) {
      if (a.roots[i].real() != b.roots[i].real()) return a.roots[i].real() < b.roots[i].real();
      if (a.roots[i].imag() != b.roots[i].imag()) return a.roots[i].imag() < b.roots[i].imag();
    }
    return a.roots.size() < b.roots.size();
  });
  return accepted;
}

namespace {

cplx kernel_sum_real_eta(const std::vector<cplx>& u, double b, double eta) {
  cplx sum = 0.0;
  const double ce = std::cos(eta);
  for (const cplx& x : u) {
    const cplx d1 = std::cosh(x + 2.0 * b) - ce;
    const cplx d2 = std::cosh(x - 2.0 * b) - ce;
    if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12)
      throw KernelPoleError("energy kernel pole: cosh(u +- 2b) = cos(eta)");
    sum += 1.0 / d1 + 1.0 / d2;
  }
  return sum;
}

}  // namespace

cplx energy_from_roots(const BetheRoots& roots, const ModelParams& p) {
  BetheRoots work = roots;
  if (roots.family == BaeFamily::RationalLambda) {
    // lambda -> u: u = -i(2 lambda + eta) (sinh families), u = 2 lambda + eta (sin family).
    work.family = family_for(p);
    for (cplx& r : work.roots)
      r = work.family == BaeFamily::ImagEtaU ? 2.0 * r + p.eta_c()
                                             : -iu * (2.0 * r + p.eta_c());
  } else if (roots.family != family_for(p)) {
    throw std::invalid_argument("Bethe root parametrization does not match the regime");
  }

  const double N = p.half_sites();
  switch (p.regime) {
    case Regime::RealEtaHermitian: {
      const double se = std::sin(p.eta), ce = std::cos(p.eta);
      const double c2b = std::cosh(2.0 * p.b);
      const cplx constant = N * ce * (c2b * c2b - std::cos(2.0 * p.eta)) / (se * se);
      const double kernel = std::cosh(4.0 * p.b) - std::cos(2.0 * p.eta);
      return constant - kernel * kernel_sum_real_eta(work.roots, p.b, p.eta);
    }
    case Regime::ImagEtaHermitian: {
      const double sh = std::sinh(p.gamma), ch = std::cosh(p.gamma);
      const double c2a = std::cos(2.0 * p.a);
      const cplx constant = N * ch * (std::cosh(2.0 * p.gamma) - c2a * c2a) / (sh * sh);
      const double kernel = std::cosh(2.0 * p.gamma) - std::cos(4.0 * p.a);
      cplx sum = 0.0;
      for (const cplx& x : work.roots) {
        const cplx d1 = ch - std::cos(x + 2.0 * p.a);
        const cplx d2 = ch - std::cos(x - 2.0 * p.a);
        if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12)
          throw KernelPoleError("energy kernel pole: cos(u +- 2a) = cosh(gamma)");
        sum += 1.0 / d1 + 1.0 / d2;
      }
      return constant - kernel * sum;
    }
    case Regime::NonHermitian: {
      const double se = std::sin(p.eta), ce = std::cos(p.eta);
      const double c2a = std::cos(2.0 * p.a);
      const cplx constant = N * ce * (c2a * c2a - std::cos(2.0 * p.eta)) / (se * se);
      const double kernel = std::cos(4.0 * p.a) - std::cos(2.0 * p.eta);
      cplx sum = 0.0;
      for (const cplx& x : work.roots) {
        const cplx d1 = std::cosh(x + 2.0 * iu * p.a) - ce;
        const cplx d2 = std::cosh(x - 2.0 * iu * p.a) - ce;
        if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12)
          throw KernelPoleError("energy kernel pole: cosh(u +- 2ia) = cos(eta)");
        sum += 1.0 / d1 + 1.0 / d2;
      }
      return constant - kernel * sum;
    }
  }
  throw std::logic_error("unreachable regime");
}

std::vector<cplx> to_lambda(const BetheRoots& roots, const ModelParams& p) {
  std::vector<cplx> lam;
  lam.reserve(roots.roots.size());
  const cplx eta = p.eta_c();
  for (const cplx& u : roots.roots) {
    if (roots.family == BaeFamily::RationalLambda)
      lam.push_back(u);
    else if (roots.family == BaeFamily::ImagEtaU)
      lam.push_back(0.5 * u - 0.5 * eta);
    else
      lam.push_back(0.5 * iu * u - 0.5 * eta);
  }
  return lam;
}

CompletenessReport match_spectrum(const std::vector<cplx>& bethe_energies,
                                  const SpectrumResult& ed, double tol) {
  CompletenessReport report;
  std::vector<bool> covered(ed.levels.size(), false);
  for (const cplx& e : bethe_energies) {
    double best = std::numeric_limits<double>::infinity();
    size_t best_i = ed.levels.size();
    for (size_t i = 0; i < ed.levels.size(); ++i) {
      const double d = std::abs(e - ed.levels[i].value);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    if (best_i < ed.levels.size() && best < tol) {
      report.matched.push_back({e, ed.levels[best_i].value, best});
      covered[best_i] = true;
    }
  }
  int n_covered = 0;
  for (size_t i = 0; i < ed.levels.size(); ++i) {
    if (covered[i])
      ++n_covered;
    else
      report.unmatched_levels.push_back(ed.levels[i].value);
  }
  report.coverage_fraction =
      ed.levels.empty() ? 0.0 : double(n_covered) / double(ed.levels.size());
  return report;
}

}  // namespace spinchain
