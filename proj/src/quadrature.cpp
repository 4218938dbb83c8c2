#include "spinchain/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchain/types.hpp"

namespace spinchain {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double err = left + right - whole;
  if (depth <= 0) throw ConvergenceError("adaptive quadrature recursion limit reached");
  if (std::abs(err) < 15.0 * tol) return left + right + err / 15.0;
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b);
  const double m = 0.5 * (a + b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  const double tol = std::max(abs_tol, rel_tol * std::abs(whole));
  return adapt(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double integrate_real_line(const std::function<double(double)>& f, double rel_tol, double scale) {
  auto g = [&](double t) {
    const double x = scale * std::atanh(t);
    if (!std::isfinite(x)) return 0.0;
    const double jac = scale / (1.0 - t * t);
    const double v = f(x) * jac;
    return std::isfinite(v) ? v : 0.0;
  };
  const double edge = 1.0 - 1e-14;
  return integrate_adaptive(g, -edge, edge, rel_tol);
}

}  // namespace spinchain
