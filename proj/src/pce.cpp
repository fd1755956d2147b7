#include "sgswe/pce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace sgswe {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk + 1.0) * x * p1 - kk * p0) / (kk + 1.0);
    p0 = p1;
    p1 = p2;
  }
  const double nn = static_cast<double>(n);
  const double dp = nn * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

void gauss_legendre(std::size_t n, Vec& nodes, Vec& weights) {
  nodes.resize(static_cast<Eigen::Index>(n));
  weights.resize(static_cast<Eigen::Index>(n));
  const double nn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nn + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, dp] = legendre_with_derivative(n, x);
    (void)p;
    // ascending order
    const auto idx = static_cast<Eigen::Index>(n - 1 - i);
    nodes[idx] = x;
    weights[idx] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

Vec PceBasis::polynomials_at(double xi) const {
  Vec phi(static_cast<Eigen::Index>(K_));
  double p0 = 1.0;
  double p1 = xi;
  for (std::size_t k = 0; k < K_; ++k) {
    double pk;
    if (k == 0) {
      pk = 1.0;
    } else if (k == 1) {
      pk = xi;
    } else {
      const double n = static_cast<double>(k - 1);
      pk = ((2.0 * n + 1.0) * xi * p1 - n * p0) / (n + 1.0);
      p0 = p1;
      p1 = pk;
    }
    phi[static_cast<Eigen::Index>(k)] = std::sqrt(2.0 * static_cast<double>(k) + 1.0) * pk;
  }
  return phi;
}

PceBasis PceBasis::legendre(std::size_t K, std::size_t quad_nodes) {
  if (K == 0) throw ConfigError("K", "basis dimension must be at least 1");
  if (quad_nodes == 0) quad_nodes = 2 * K;
  // triple products have degree 3(K-1); an n-point rule is exact to 2n-1
  if (2 * quad_nodes - 1 < 3 * (K - 1)) {
    throw ConfigError("quad_order", "quadrature with " + std::to_string(quad_nodes) +
                                        " nodes cannot integrate triple products for K=" +
                                        std::to_string(K));
  }

  PceBasis b;
  b.K_ = K;
  gauss_legendre(quad_nodes, b.nodes_, b.weights_);
  b.weights_ /= 2.0;

  const auto M = static_cast<Eigen::Index>(quad_nodes);
  const auto Ki = static_cast<Eigen::Index>(K);
  b.table_.resize(M, Ki);
  for (Eigen::Index m = 0; m < M; ++m) b.table_.row(m) = b.polynomials_at(b.nodes_[m]).transpose();
  b.table_.col(0).setOnes();

  const Mat gram = b.table_.transpose() * b.weights_.asDiagonal() * b.table_;
  const double residual = (gram - Mat::Identity(Ki, Ki)).cwiseAbs().maxCoeff();
  if (residual > 1e-12) {
    throw SolverError(FailureKind::Numerical,
                      "orthonormality check failed, residual " + std::to_string(residual));
  }

  // Fill each unordered index triple once so every permutation is bitwise equal.
  b.triple_.assign(K, Mat::Zero(Ki, Ki));
  for (Eigen::Index k = 0; k < Ki; ++k) {
    for (Eigen::Index l = k; l < Ki; ++l) {
      for (Eigen::Index n = l; n < Ki; ++n) {
        double s = 0.0;
        for (Eigen::Index m = 0; m < M; ++m) {
          s += b.weights_[m] * b.table_(m, k) * b.table_(m, l) * b.table_(m, n);
        }
        const std::array<Eigen::Index, 3> idx{k, l, n};
        std::array<Eigen::Index, 3> p = idx;
        std::sort(p.begin(), p.end());
        do {
          b.triple_[static_cast<std::size_t>(p[0])](p[1], p[2]) = s;
        } while (std::next_permutation(p.begin(), p.end()));
      }
    }
  }
  return b;
}

PceBasis build_basis(std::size_t K, std::size_t quad_nodes) { return PceBasis::legendre(K, quad_nodes); }

Mat PceBasis::p_operator(const Vec& a) const {
  if (static_cast<std::size_t>(a.size()) != K_) {
    throw std::invalid_argument("p_operator: coefficient vector has length " + std::to_string(a.size()) +
                                ", expected " + std::to_string(K_));
  }
  const auto Ki = static_cast<Eigen::Index>(K_);
  Mat P = Mat::Zero(Ki, Ki);
  for (std::size_t k = 0; k < K_; ++k) {
    const double ak = a[static_cast<Eigen::Index>(k)];
    if (ak != 0.0) P.noalias() += ak * triple_[k];
  }
  return P;
}

double PceBasis::evaluate_at_node(const Vec& coeffs, std::size_t m) const {
  if (m >= num_nodes()) {
    throw std::out_of_range("evaluate_at_node: node " + std::to_string(m) + " of " +
                            std::to_string(num_nodes()));
  }
  if (static_cast<std::size_t>(coeffs.size()) != K_) throw std::invalid_argument("evaluate_at_node: length mismatch");
  return table_.row(static_cast<Eigen::Index>(m)).dot(coeffs);
}

Vec PceBasis::evaluate_at_nodes(const Vec& coeffs) const {
  if (static_cast<std::size_t>(coeffs.size()) != K_) throw std::invalid_argument("evaluate_at_nodes: length mismatch");
  return table_ * coeffs;
}

Vec PceBasis::project(const std::function<double(double)>& f) const {
  Vec fw(nodes_.size());
  for (Eigen::Index m = 0; m < nodes_.size(); ++m) fw[m] = weights_[m] * f(nodes_[m]);
  return table_.transpose() * fw;
}

Moments mean_variance(const Vec& coeffs) {
  if (coeffs.size() == 0) throw std::invalid_argument("mean_variance: empty coefficient vector");
  return {coeffs[0], coeffs.tail(coeffs.size() - 1).squaredNorm()};
}

}  // namespace sgswe
