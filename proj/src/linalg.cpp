#include "sgswe/linalg.hpp"

#include <string>

namespace sgswe::linalg {

namespace {

Mat symmetrized(const Mat& A, const char* who) {
  if (A.rows() != A.cols()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
  const double scale = A.cwiseAbs().maxCoeff();
  const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric (asymmetry " +
                                std::to_string(asym) + ")");
  }
  return 0.5 * (A + A.transpose());
}

}  // namespace

SymEig sym_eig(const Mat& A) {
  const Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(A, "sym_eig"));
  if (es.info() != Eigen::Success) {
    throw SolverError(FailureKind::Numerical, "sym_eig: eigensolver did not converge");
  }
  return {es.eigenvectors(), es.eigenvalues()};
}

Vec sym_eigenvalues(const Mat& A) {
  const Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(A, "sym_eigenvalues"), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw SolverError(FailureKind::Numerical, "sym_eigenvalues: eigensolver did not converge");
  }
  return es.eigenvalues();
}

Mat spd_sqrt(const Mat& A) {
  const SymEig e = sym_eig(A);
  if (e.values.size() > 0 && e.values[0] <= 0.0) {
    throw SolverError(FailureKind::Hyperbolicity,
                      "spd_sqrt: matrix is not positive definite (smallest eigenvalue " +
                          std::to_string(e.values[0]) + ")");
  }
  const Mat G = e.vectors * e.values.cwiseSqrt().asDiagonal() * e.vectors.transpose();
  return 0.5 * (G + G.transpose());
}

Vec spd_solve(const Mat& A, const Vec& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("spd_solve: dimension mismatch");
  const Eigen::LLT<Mat> llt(symmetrized(A, "spd_solve"));
  if (llt.info() != Eigen::Success) {
    throw SolverError(FailureKind::Hyperbolicity, "spd_solve: matrix is not positive definite");
  }
  return llt.solve(b);
}

}  // namespace sgswe::linalg
