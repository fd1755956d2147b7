#pragma once

#include "sgswe/entropy.hpp"
#include "sgswe/pce.hpp"
#include "sgswe/schemes.hpp"
#include "sgswe/swe_core.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace sgswe::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline Vec random_vec(std::size_t n, double scale = 1.0) {
  Vec v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = uniform(-scale, scale);
  return v;
}

// Height whose surrogate stays above h0/2 for every xi: the higher modes are
// bounded by |phi_k| <= sqrt(2k - 1).
inline Vec random_height(std::size_t K, double h0_lo = 1.0, double h0_hi = 2.0) {
  Vec h = Vec::Zero(static_cast<Eigen::Index>(K));
  h[0] = uniform(h0_lo, h0_hi);
  const double budget = 0.5 * h[0];
  for (std::size_t k = 1; k < K; ++k) {
    const double bound = std::sqrt(2.0 * static_cast<double>(k + 1) - 1.0);
    const double c = uniform(-1.0, 1.0) * budget / (static_cast<double>(K) * bound);
    h[static_cast<Eigen::Index>(k)] = c;
  }
  return h;
}

struct RandomCell {
  CellState state;
  Vec u;
  Vec bottom;
};

inline RandomCell random_cell(const PceBasis& basis, double u_scale = 0.5, double b_scale = 0.2) {
  const std::size_t K = basis.size();
  RandomCell c;
  c.state.h = random_height(K);
  c.u = random_vec(K, u_scale);
  c.state.q = basis.p_operator(c.state.h) * c.u;
  c.bottom = random_vec(K, b_scale);
  return c;
}

inline CellData to_data(const PceBasis& basis, const RandomCell& c, double g) {
  return prepare_cell(basis, c.state, c.u, c.bottom, g);
}

inline Vec stack(const Vec& a, const Vec& b) {
  Vec out(a.size() + b.size());
  out << a, b;
  return out;
}

inline CellState unstack(const Vec& U) {
  const auto K = U.size() / 2;
  return {U.head(K), U.tail(K)};
}

// Central differences of a scalar function.
inline Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double h) {
  Vec grad(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    grad[i] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return grad;
}

inline Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& x, double h) {
  const Vec f0 = f(x);
  Mat J(f0.size(), x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    J.col(i) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return J;
}

inline double rel_err(const Mat& a, const Mat& b) {
  const double s = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  return (a - b).cwiseAbs().maxCoeff() / s;
}

// Smallest node value of the height in every cell is above this for random_height.
inline bool node_positive(const PceBasis& basis, const Vec& h) { return basis.evaluate_at_nodes(h).minCoeff() > 0.0; }

}  // namespace sgswe::testing
