#include "fpt/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fpt {

namespace {
constexpr double kInvSqrtTwoPi = 0.3989422804014327;  // 1/sqrt(2*pi)
constexpr double kInvSqrtTwo = 0.7071067811865476;    // 1/sqrt(2)

// Acklam's rational approximation for the normal quantile, used only as a
// Newton starting point (its own error ~1e-9).
double quantile_seed(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}
}  // namespace

double phi(double u) { return kInvSqrtTwoPi * std::exp(-0.5 * u * u); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrtTwo); }

double Psi(double x) {
  if (x <= 0.0) return 0.0;
  return std::erf(x * kInvSqrtTwo);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  }
  double x = quantile_seed(p);
  // Two Newton steps bring the seed to machine precision.
  for (int i = 0; i < 2; ++i) {
    const double e = normal_cdf(x) - p;
    const double d = phi(x);
    if (d <= std::numeric_limits<double>::min()) break;
    x -= e / d;
  }
  return x;
}

}  // namespace fpt
