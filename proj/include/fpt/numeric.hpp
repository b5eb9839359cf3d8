// numeric.hpp - small numeric utilities: compensated summation, adaptive
// Simpson quadrature, and a least-squares slope fit on log-log data.

#ifndef FPT_NUMERIC_HPP
#define FPT_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fpt {

// Neumaier-compensated accumulator. Survival masses decay like n^{-1/2}
// while tables hold up to 2n+1 cells, so plain summation would eat into
// the 1e-12 contracts at n = 1e4.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) {
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

namespace detail {

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction.
inline double integrate_adaptive(const std::function<double(double)>& f,
                                 double a, double b, double tol = 1e-13,
                                 int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points_used = 0;
};

// Least-squares slope of log(y) against log(x). Points with x <= 0 or
// y <= 0 are rejected by the caller's contract; returns nullopt when
// fewer than two usable points remain.
inline std::optional<SlopeFit> fit_loglog_slope(
    std::span<const std::pair<double, double>> points) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) continue;
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2) return std::nullopt;
  const double denom = used * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  SlopeFit fit;
  fit.slope = (used * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / used;
  fit.points_used = used;
  return fit;
}

}  // namespace fpt

#endif  // FPT_NUMERIC_HPP
