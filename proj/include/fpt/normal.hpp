// normal.hpp - standard normal helpers: density phi, CDF, the folded
// integral Psi(x) = 2*int_0^{x+} phi(u) du, and the quantile function.

#ifndef FPT_NORMAL_HPP
#define FPT_NORMAL_HPP

namespace fpt {

inline constexpr double kSqrtTwoOverPi = 0.7978845608028654;  // sqrt(2/pi) = 2*phi(0)

// Standard normal density.
double phi(double u);

// Phi(x) = P(Z <= x). Absolute error below 1e-15 on |x| <= 8 (erfc-based).
double normal_cdf(double x);

// Psi(x) = 2*int_0^{x} phi(u) du for x > 0, and 0 for x <= 0.
// Equals 2*Phi(x) - 1 on x >= 0.
double Psi(double x);

// Inverse of normal_cdf on (0, 1). Newton-polished to full precision.
double normal_quantile(double p);

}  // namespace fpt

#endif  // FPT_NORMAL_HPP
