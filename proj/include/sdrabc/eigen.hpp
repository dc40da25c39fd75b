#pragma once

#include <cstddef>
#include <vector>

#include "sdrabc/linalg.hpp"

namespace sdrabc {

/// Full symmetric eigendecomposition, eigenvalues descending.
///
/// Sign convention: in every eigenvector the component of largest magnitude
/// (first such index on ties) is positive, which makes the decomposition a
/// deterministic function of the input matrix.
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;  // n x n, column j pairs with values[j]
};

/// Cyclic Jacobi sweeps on a dense symmetric matrix. Convergence: off-diagonal
/// Frobenius norm below 1e-11 * ||S||_F.
SymmetricEigen jacobi_eigen(const Matrix& s);

/// Top-k eigenpairs of a symmetric matrix with the positivity floor applied:
/// eigenvalues <= 1e-10 * lambda_1 are excluded even if requested, because the
/// summary map inverts them. `truncated` reports that fewer than k qualified.
struct TopEigen {
  std::vector<double> values;
  Matrix vectors;  // n x k_eff
  bool truncated = false;
};

TopEigen top_k_eigen(const Matrix& s, std::size_t k);

}  // namespace sdrabc
