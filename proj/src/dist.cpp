#include "fpt/dist.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpt/errors.hpp"
#include "fpt/numeric.hpp"

namespace fpt {

namespace {
constexpr double kMomentTol = 1e-12;
}

IncrementSpec IncrementSpec::rademacher() {
  IncrementSpec s;
  s.kind_ = IncrementKind::rademacher;
  s.atoms_ = {{+1.0, 0.5}, {-1.0, 0.5}};
  s.support_bound_ = 1.0;
  s.variance_ = 1.0;
  return s;
}

IncrementSpec IncrementSpec::three_point(double level) {
  if (!(level >= 1.0) || !std::isfinite(level)) {
    throw SpecError("three_point: level must satisfy N >= 1 (so p <= 1/2)");
  }
  const double p = 1.0 / (2.0 * level * level);
  IncrementSpec s;
  s.kind_ = IncrementKind::three_point;
  s.atoms_ = {{+level, p}, {-level, p}};
  const double rest = 1.0 - 2.0 * p;
  if (rest > 0.0) s.atoms_.push_back({0.0, rest});
  s.support_bound_ = level;
  s.variance_ = 1.0;  // level^2 * 2p = 1 exactly
  return s;
}

IncrementSpec IncrementSpec::uniform_symmetric(double half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw SpecError("uniform_symmetric: half-width must be positive");
  }
  IncrementSpec s;
  s.kind_ = IncrementKind::uniform_symmetric;
  s.half_width_ = half_width;
  s.support_bound_ = half_width;
  s.variance_ = half_width * half_width / 3.0;
  return s;
}

IncrementSpec IncrementSpec::finite_discrete(std::vector<Atom> atoms) {
  if (atoms.empty()) throw SpecError("finite_discrete: empty atom list");
  KahanSum total, mean, second;
  double support = 0.0;
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.value) || !(a.prob > 0.0) || a.prob > 1.0) {
      throw SpecError("finite_discrete: atom probabilities must lie in (0, 1]");
    }
    total.add(a.prob);
    mean.add(a.value * a.prob);
    second.add(a.value * a.value * a.prob);
    support = std::max(support, std::abs(a.value));
  }
  if (std::abs(total.value() - 1.0) > kMomentTol) {
    throw SpecError("finite_discrete: probabilities sum to " +
                    std::to_string(total.value()) + ", need 1 within 1e-12");
  }
  if (std::abs(mean.value()) > kMomentTol) {
    throw SpecError("finite_discrete: mean is " + std::to_string(mean.value()) +
                    "; specs are rejected, not re-centered");
  }
  IncrementSpec s;
  s.kind_ = IncrementKind::finite_discrete;
  s.atoms_ = std::move(atoms);
  s.support_bound_ = support;
  s.variance_ = second.value();
  return s;
}

IncrementSpec IncrementSpec::constant_zero() {
  IncrementSpec s;
  s.kind_ = IncrementKind::finite_discrete;
  s.atoms_ = {{0.0, 1.0}};
  s.support_bound_ = 0.0;
  s.variance_ = 0.0;
  return s;
}

IncrementSpec IncrementSpec::scaled_by(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw SpecError("scaled_by: scale must be positive and finite");
  }
  IncrementSpec s = *this;
  for (Atom& a : s.atoms_) a.value *= c;
  s.half_width_ *= c;
  s.support_bound_ *= c;
  s.variance_ *= c * c;
  return s;
}

double sample(const IncrementSpec& spec, RngStream& stream) {
  const double u = stream.next_double();
  switch (spec.kind()) {
    case IncrementKind::rademacher:
      return u < 0.5 ? 1.0 : -1.0;
    case IncrementKind::uniform_symmetric:
      return (2.0 * u - 1.0) * spec.half_width();
    case IncrementKind::three_point:
    case IncrementKind::finite_discrete: {
      double cum = 0.0;
      const auto& atoms = spec.atoms();
      for (const Atom& a : atoms) {
        cum += a.prob;
        if (u < cum) return a.value;
      }
      return atoms.back().value;
    }
  }
  return 0.0;  // unreachable
}

}  // namespace fpt
