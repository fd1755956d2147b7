#pragma once

#include "sgswe/types.hpp"

namespace sgswe::linalg {

/// Eigenpairs of a symmetric matrix, eigenvalues ascending.
struct SymEig {
  Mat vectors;
  Vec values;
};

/// Input is symmetrized as (A + A^T)/2 first. Throws std::invalid_argument if
/// A is visibly non-symmetric (beyond 1e-12 ||A||).
SymEig sym_eig(const Mat& A);

/// Eigenvalues only; same symmetrization and checks as sym_eig.
Vec sym_eigenvalues(const Mat& A);

/// Symmetric positive definite square root G with G G = A.
/// Throws SolverError(Hyperbolicity) when the smallest eigenvalue is <= 0.
Mat spd_sqrt(const Mat& A);

/// Solves A x = b for SPD A by Cholesky.
Vec spd_solve(const Mat& A, const Vec& b);

}  // namespace sgswe::linalg
