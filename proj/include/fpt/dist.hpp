// dist.hpp - bounded, mean-zero increment distributions and sampling.

#ifndef FPT_DIST_HPP
#define FPT_DIST_HPP

#include <vector>

#include "fpt/rng.hpp"

namespace fpt {

enum class IncrementKind {
  rademacher,
  three_point,
  uniform_symmetric,
  finite_discrete,
};

struct Atom {
  double value = 0.0;
  double prob = 0.0;
  bool operator==(const Atom&) const = default;
};

// One increment distribution: atoms for the discrete kinds, a half-width
// for the continuous uniform. Mean is exactly zero by construction
// (finite_discrete specs with |mean| > 1e-12 are rejected, not
// re-centered). Immutable after construction and safe to share across
// threads.
class IncrementSpec {
 public:
  // +1/-1 with probability 1/2 each.
  static IncrementSpec rademacher();

  // +level/-level with probability p = 1/(2*level^2) each, 0 otherwise.
  // Requires level >= 1 (so p <= 1/2); variance is exactly 1.
  static IncrementSpec three_point(double level);

  // Uniform on [-half_width, half_width]; variance half_width^2/3.
  static IncrementSpec uniform_symmetric(double half_width);

  // Arbitrary atom list; probabilities must sum to 1 within 1e-12 and the
  // mean must vanish within 1e-12.
  static IncrementSpec finite_discrete(std::vector<Atom> atoms);

  // Degenerate point mass at 0 (the only zero-variance spec permitted).
  static IncrementSpec constant_zero();

  // Same distribution with all values multiplied by c > 0.
  IncrementSpec scaled_by(double c) const;

  IncrementKind kind() const { return kind_; }
  bool is_discrete() const { return kind_ != IncrementKind::uniform_symmetric; }
  double support_bound() const { return support_bound_; }
  double variance() const { return variance_; }

  // Atoms, for the discrete kinds; empty for uniform_symmetric.
  const std::vector<Atom>& atoms() const { return atoms_; }

  // Half-width, for uniform_symmetric.
  double half_width() const { return half_width_; }

  bool operator==(const IncrementSpec&) const = default;

 private:
  IncrementSpec() = default;

  IncrementKind kind_ = IncrementKind::rademacher;
  std::vector<Atom> atoms_;
  double half_width_ = 0.0;
  double support_bound_ = 0.0;
  double variance_ = 0.0;
};

// One draw from the spec. The value lies in
// [-support_bound, +support_bound]; exactly one uniform is consumed per
// draw regardless of kind.
double sample(const IncrementSpec& spec, RngStream& stream);

}  // namespace fpt

#endif  // FPT_DIST_HPP
