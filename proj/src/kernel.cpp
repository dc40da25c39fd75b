#include "sdrabc/kernel.hpp"

#include <cmath>

#include "sdrabc/eigen.hpp"
#include "sdrabc/errors.hpp"
#include "sdrabc/parallel.hpp"

namespace sdrabc {

void KernelSpec::validate() const {
  if (kind == KernelKind::gaussian && !(gamma > 0.0))
    throw ArgumentError("KernelSpec: gaussian kernel needs gamma > 0");
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("kernel_eval: vectors differ in length");
  spec.validate();
  if (spec.kind == KernelKind::linear) return dot(x, y);
  // ||x-y||^2 via norms and the cross term; clamp kills negative roundoff.
  double d2 = squared_norm(x) + squared_norm(y) - 2.0 * dot(x, y);
  if (d2 < 0.0) d2 = 0.0;
  return std::exp(-spec.gamma * d2);
}

Matrix gram(const KernelSpec& spec, const Matrix& data, int threads) {
  spec.validate();
  const std::size_t n = data.rows();
  if (n == 0) throw ArgumentError("gram: empty data");
  Matrix k(n, n);
  parallel_for(0, n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j)
      k(i, j) = kernel_eval(spec, data.row_span(i), data.row_span(j));
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) k(i, j) = k(j, i);
  return k;
}

Matrix center_gram(const Matrix& k) {
  if (k.rows() != k.cols()) throw DimensionError("center_gram: matrix must be square");
  const std::size_t n = k.rows();
  const double inv_n = 1.0 / static_cast<double>(n);

  Vector row_mean(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    const double* r = k.row(i);
    for (std::size_t j = 0; j < n; ++j) s += r[j];
    row_mean[i] = s * inv_n;
  }
  double grand = 0.0;
  for (double m : row_mean) grand += m;
  grand *= inv_n;

  // S_ij = K_ij - (rm_i + rm_j) + grand; the grouping keeps S bitwise
  // symmetric because rm_i + rm_j commutes exactly.
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* r = k.row(i);
    double* o = s.row(i);
    for (std::size_t j = 0; j < n; ++j) o[j] = r[j] - (row_mean[i] + row_mean[j]) + grand;
  }
  return s;
}

CenteredGram centered_gram_eigen(const KernelSpec& spec, const Matrix& data,
                                 std::size_t k, int threads) {
  CenteredGram out;
  out.k = gram(spec, data, threads);
  out.s = center_gram(out.k);
  TopEigen top = top_k_eigen(out.s, k);
  out.eigenvalues = std::move(top.values);
  out.psi = std::move(top.vectors);
  out.truncated = top.truncated;
  return out;
}

}  // namespace sdrabc
