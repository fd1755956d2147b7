#pragma once

#include "sgswe/types.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace sgswe {

/// Orthonormal Legendre chaos basis for a uniform random variable on [-1, 1].
///
/// Holds a probability-normalized Gauss-Legendre rule, the basis evaluated at
/// its nodes and the triple-product tensor (M_k)_{lm} = <phi_k, phi_l phi_m>.
/// Immutable after construction; share freely across threads.
class PceBasis {
 public:
  /// Builds K basis functions with `quad_nodes` Gauss points (0 selects 2K).
  /// Throws ConfigError for K = 0 or a rule too coarse for triple products.
  static PceBasis legendre(std::size_t K, std::size_t quad_nodes = 0);

  std::size_t size() const noexcept { return K_; }
  std::size_t num_nodes() const noexcept { return static_cast<std::size_t>(nodes_.size()); }

  const Vec& nodes() const noexcept { return nodes_; }
  const Vec& weights() const noexcept { return weights_; }
  /// M x K matrix of phi_k(xi_m).
  const Mat& table() const noexcept { return table_; }
  const Mat& triple(std::size_t k) const { return triple_.at(k); }

  /// P(a) = sum_k a_k M_k.
  Mat p_operator(const Vec& a) const;

  double evaluate_at_node(const Vec& coeffs, std::size_t m) const;
  /// All node values at once: table() * coeffs.
  Vec evaluate_at_nodes(const Vec& coeffs) const;

  /// phi_1(xi) .. phi_K(xi) at an arbitrary point.
  Vec polynomials_at(double xi) const;

  /// Galerkin coefficients of f(xi) computed with the basis quadrature.
  Vec project(const std::function<double(double)>& f) const;

 private:
  PceBasis() = default;

  std::size_t K_ = 0;
  Vec nodes_;
  Vec weights_;
  Mat table_;
  std::vector<Mat> triple_;
};

/// Free-function form of PceBasis::legendre.
PceBasis build_basis(std::size_t K, std::size_t quad_nodes = 0);

struct Moments {
  double mean;
  double variance;
};

/// Mean is the first coefficient, variance the sum of squares of the rest.
Moments mean_variance(const Vec& coeffs);

/// Gauss-Legendre rule on [-1, 1] with weights summing to 2.
void gauss_legendre(std::size_t n, Vec& nodes, Vec& weights);

}  // namespace sgswe
