#pragma once

#include <span>
#include <vector>

#include "sdrabc/linalg.hpp"

namespace sdrabc {

enum class KernelKind { gaussian, linear };

/// Kernel choice. gamma multiplies the squared Euclidean distance of the
/// Gaussian kernel and is ignored by the linear kernel.
struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double gamma = 1.0;

  void validate() const;
};

/// kappa(x, y). Gaussian: exp(-gamma * ||x - y||^2) with the squared distance
/// computed as ||x||^2 + ||y||^2 - 2 x.y clamped at zero. Linear: x.y.
double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y);

/// Pairwise kernel matrix of the data rows. Symmetric by construction; rows
/// may be computed in parallel without changing any entry.
Matrix gram(const KernelSpec& spec, const Matrix& data, int threads = 1);

/// Double centering S = Q K Q with Q = I - J/n. Rows and columns of the
/// result sum to zero; the output is bitwise symmetric.
Matrix center_gram(const Matrix& k);

/// Gram matrix, its centered form and the leading eigenpairs in one bundle.
struct CenteredGram {
  Matrix k;
  Matrix s;
  std::vector<double> eigenvalues;  // descending, all above the positivity floor
  Matrix psi;                       // n x k_eff, orthonormal columns
  bool truncated = false;           // fewer eigenpairs qualified than requested
};

CenteredGram centered_gram_eigen(const KernelSpec& spec, const Matrix& data,
                                 std::size_t k, int threads = 1);

}  // namespace sdrabc
