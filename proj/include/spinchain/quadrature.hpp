#pragma once

#include <functional>

namespace spinchain {

// Adaptive Simpson on a finite interval.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 1e-14);

// Integral over the real line for exponentially decaying integrands; the
// tanh substitution x = scale * atanh(t) maps to t in (-1, 1).
double integrate_real_line(const std::function<double(double)>& f, double rel_tol = 1e-10,
                           double scale = 4.0);

}  // namespace spinchain
