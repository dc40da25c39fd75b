#include "sdrabc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sdrabc/errors.hpp"

namespace sdrabc {

namespace {

void check_square_symmetric(const Matrix& s, const char* who) {
  if (s.rows() != s.cols()) throw DimensionError(std::string(who) + ": matrix must be square");
  const std::size_t n = s.rows();
  double scale = 0.0;
  for (double x : s.storage()) scale = std::max(scale, std::fabs(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(s(i, j) - s(j, i)) > 1e-10 * std::max(1.0, scale))
        throw ArgumentError(std::string(who) + ": matrix must be symmetric");
}

double off_diagonal_norm(const Matrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

/// Flip the vector so its largest-magnitude component (first index on exact
/// ties) is positive.
void fix_sign(double* v, std::size_t n) {
  std::size_t best = 0;
  double best_abs = std::fabs(v[0]);
  for (std::size_t i = 1; i < n; ++i) {
    double a = std::fabs(v[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (v[best] < 0.0) {
    for (std::size_t i = 0; i < n; ++i) v[i] = -v[i];
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(const Matrix& s) {
  check_square_symmetric(s, "jacobi_eigen");
  const std::size_t n = s.rows();

  Matrix a = s;
  // Eigenvectors kept as rows so the rotations touch contiguous memory.
  Matrix vt = Matrix::identity(n);

  const double fro = frobenius_norm(s);
  const double tol = 1e-11 * fro;

  if (n > 1 && fro > 0.0) {
    const std::size_t nn = n;
    bool converged = false;
    for (int sweep = 1; sweep <= 100; ++sweep) {
      double off = off_diagonal_norm(a);
      if (off <= tol) {
        converged = true;
        break;
      }
      // NR-style threshold keeps early sweeps from chasing negligible entries.
      const double thresh =
          sweep < 4 ? 0.2 * off * off / static_cast<double>(nn * nn) : 0.0;
      for (std::size_t p = 0; p + 1 < nn; ++p) {
        for (std::size_t q = p + 1; q < nn; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0 || apq * apq <= thresh) continue;
          const double app = a(p, p);
          const double aqq = a(q, q);
          const double theta = 0.5 * (aqq - app) / apq;
          const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double sn = t * c;
          const double tau = sn / (1.0 + c);
          a(p, p) = app - t * apq;
          a(q, q) = aqq + t * apq;
          a(p, q) = 0.0;
          // Upper-triangle update in three segments.
          for (std::size_t j = 0; j < p; ++j) {
            const double x = a(j, p), y = a(j, q);
            a(j, p) = x - sn * (y + tau * x);
            a(j, q) = y + sn * (x - tau * y);
          }
          for (std::size_t j = p + 1; j < q; ++j) {
            const double x = a(p, j), y = a(j, q);
            a(p, j) = x - sn * (y + tau * x);
            a(j, q) = y + sn * (x - tau * y);
          }
          double* rp = a.row(p);
          double* rq = a.row(q);
          for (std::size_t j = q + 1; j < nn; ++j) {
            const double x = rp[j], y = rq[j];
            rp[j] = x - sn * (y + tau * x);
            rq[j] = y + sn * (x - tau * y);
          }
          double* vp = vt.row(p);
          double* vq = vt.row(q);
          for (std::size_t j = 0; j < nn; ++j) {
            const double x = vp[j], y = vq[j];
            vp[j] = x - sn * (y + tau * x);
            vq[j] = y + sn * (x - tau * y);
          }
        }
      }
    }
    if (!converged && off_diagonal_norm(a) > tol)
      throw RootError("jacobi_eigen: sweep limit reached before convergence");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) > a(j, j);
  });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  std::vector<double> buf(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = a(src, src);
    for (std::size_t i = 0; i < n; ++i) buf[i] = vt(src, i);
    fix_sign(buf.data(), n);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = buf[i];
  }
  return out;
}

TopEigen top_k_eigen(const Matrix& s, std::size_t k) {
  if (s.rows() != s.cols()) throw DimensionError("top_k_eigen: matrix must be square");
  const std::size_t n = s.rows();
  if (k < 1 || k > n) throw ArgumentError("top_k_eigen: need 1 <= k <= n");

  SymmetricEigen full = jacobi_eigen(s);
  const double lambda1 = full.values.empty() ? 0.0 : full.values[0];
  const double floor = 1e-10 * lambda1;

  std::size_t qualified = 0;
  while (qualified < n && full.values[qualified] > floor && full.values[qualified] > 0.0)
    ++qualified;

  TopEigen out;
  out.truncated = qualified < k;
  const std::size_t take = std::min(k, qualified);
  out.values.assign(full.values.begin(), full.values.begin() + take);
  out.vectors = Matrix(n, take);
  for (std::size_t j = 0; j < take; ++j)
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = full.vectors(i, j);
  return out;
}

}  // namespace sdrabc
