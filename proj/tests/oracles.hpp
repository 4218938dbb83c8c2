#pragma once

// Test-side oracles, kept independent of the library implementation paths
// they check.

#include <functional>
#include <random>

#include "spinchain/types.hpp"

namespace oracles {

using spinchain::cplx;
using spinchain::Matrix;

// Plain Kronecker product, slow-index-first convention.
inline Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Brute-force embedding of a single-site operator by chained Kronecker
// products: I (x) ... (x) op (x) ... (x) I.
inline Matrix naive_single_site(const Matrix& op, int site, int n_sites) {
  Matrix out = Matrix::Identity(1, 1);
  for (int j = 1; j <= n_sites; ++j)
    out = naive_kron(out, j == site ? op : Matrix(Matrix::Identity(2, 2)));
  return out;
}

// Central finite difference of a matrix-valued function.
inline Matrix fd_derivative(const std::function<Matrix(cplx)>& f, cplx u, double h) {
  return (f(u + h) - f(u - h)) / (2.0 * h);
}

// Observed convergence order from errors at step sizes h and h/2.
inline double observed_order(double err_h, double err_h2) {
  return std::log2(err_h / err_h2);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline cplx random_cplx(std::mt19937_64& gen, double box = 1.0) {
  return {uniform(gen, -box, box), uniform(gen, -box, box)};
}

}  // namespace oracles
