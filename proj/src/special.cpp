#include "sdrabc/special.hpp"

#include <cmath>
#include <limits>

#include "sdrabc/errors.hpp"

namespace sdrabc {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))
constexpr double kSqrt2 = 1.41421356237309504880;
}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw ArgumentError("log_gamma: x must be positive");
  // Lanczos g = 7, nine coefficients.
  static const double coef[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps the series argument away from the poles.
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  double z = x - 1.0;
  double a = coef[0];
  for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
  double t = z + 7.5;
  return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double digamma(double x) {
  if (!(x > 0.0)) throw ArgumentError("digamma: x must be positive");
  double r = 0.0;
  while (x < 8.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  double y = 1.0 / (x * x);
  double series =
      y * (1.0 / 12.0 -
           y * (1.0 / 120.0 -
                y * (1.0 / 252.0 -
                     y * (1.0 / 240.0 - y * (1.0 / 132.0 - y * (691.0 / 32760.0))))));
  return r + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw ArgumentError("trigamma: x must be positive");
  double r = 0.0;
  while (x < 8.0) {
    r += 1.0 / (x * x);
    x += 1.0;
  }
  double y = 1.0 / (x * x);
  double series =
      1.0 / 6.0 -
      y * (1.0 / 30.0 - y * (1.0 / 42.0 - y * (1.0 / 30.0 - y * (5.0 / 66.0))));
  return r + 1.0 / x + 0.5 * y + (y / x) * series;
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("normal_quantile: p must be in (0,1)");
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley step against the exact CDF.
  double e = normal_cdf(x) - p;
  double u = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw ArgumentError("regularized_gamma_p: a must be positive");
  if (x < 0.0) throw ArgumentError("regularized_gamma_p: x must be nonnegative");
  if (x == 0.0) return 0.0;
  const double lg = log_gamma(a);
  if (x < a + 1.0) {
    // Series representation.
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Continued fraction for Q(a, x) by modified Lentz.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

double chi_squared_cdf(double x, std::size_t dof) {
  if (dof == 0) throw ArgumentError("chi_squared_cdf: dof must be >= 1");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(0.5 * static_cast<double>(dof), 0.5 * x);
}

double chi_squared_quantile(double p, std::size_t dof) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("chi_squared_quantile: p must be in (0,1)");
  if (dof == 0) throw ArgumentError("chi_squared_quantile: dof must be >= 1");
  const double q = static_cast<double>(dof);
  // Wilson-Hilferty start.
  double z = normal_quantile(p);
  double t = 1.0 - 2.0 / (9.0 * q) + z * std::sqrt(2.0 / (9.0 * q));
  double x = q * t * t * t;
  if (!(x > 0.0)) x = q;  // conservative restart for tiny p at small dof
  const double half = 0.5 * q;
  for (int iter = 0; iter < 100; ++iter) {
    double f = chi_squared_cdf(x, dof) - p;
    double pdf = std::exp((half - 1.0) * std::log(x) - 0.5 * x - log_gamma(half) -
                          half * std::log(2.0));
    if (pdf <= 0.0 || !std::isfinite(pdf)) break;
    double step = f / pdf;
    // Keep the iterate positive.
    if (step > x) step = 0.5 * x;
    x -= step;
    if (std::fabs(step) < 1e-10 * std::max(1.0, x)) break;
  }
  return x;
}

}  // namespace sdrabc
