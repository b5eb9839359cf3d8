#include "fpt/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "fpt/errors.hpp"
#include "fpt/numeric.hpp"

namespace fpt {

namespace {

constexpr double kVarianceTol = 1e-9;
constexpr std::int64_t kMaxDenominator = 1'000'000;
constexpr double kLatticeTol = 1e-9;

// Best rational p/q approximation with q <= max_den (continued fractions).
std::optional<std::pair<std::int64_t, std::int64_t>> to_rational(
    double x, std::int64_t max_den, double tol) {
  double v = x;
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p = static_cast<std::int64_t>(std::floor(v)), q = 1;
  v -= std::floor(v);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(static_cast<double>(p) / static_cast<double>(q) - x) <=
        tol * std::max(1.0, std::abs(x))) {
      return std::make_pair(p, q);
    }
    if (v <= 0.0) break;
    v = 1.0 / v;
    const double a_f = std::floor(v);
    if (a_f > 9.0e18) break;
    const auto a = static_cast<std::int64_t>(a_f);
    v -= a_f;
    const std::int64_t p_next = a * p + p_prev;
    const std::int64_t q_next = a * q + q_prev;
    if (q_next > max_den || q_next < q) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  if (std::abs(static_cast<double>(p) / static_cast<double>(q) - x) <=
      tol * std::max(1.0, std::abs(x))) {
    return std::make_pair(p, q);
  }
  return std::nullopt;
}

double max_step_value(const IncrementSpec& spec) {
  if (!spec.is_discrete()) return spec.half_width();
  double m = -std::numeric_limits<double>::infinity();
  for (const Atom& a : spec.atoms()) m = std::max(m, a.value);
  return m;
}

std::optional<LatticeInfo> detect_lattice_impl(
    const std::vector<IncrementSpec>& increments,
    const std::vector<double>& boundary) {
  for (const IncrementSpec& spec : increments) {
    if (!spec.is_discrete()) return std::nullopt;
  }
  std::vector<double> values;
  for (const IncrementSpec& spec : increments) {
    for (const Atom& a : spec.atoms()) {
      if (a.value != 0.0) values.push_back(a.value);
    }
  }
  for (double g : boundary) {
    if (g != 0.0) values.push_back(g);
  }

  LatticeInfo info;
  if (values.empty()) {
    info.step = 1.0;
  } else {
    double min_abs = std::numeric_limits<double>::infinity();
    for (double v : values) min_abs = std::min(min_abs, std::abs(v));
    std::int64_t lcm_den = 1;
    for (double v : values) {
      const auto r = to_rational(v / min_abs, kMaxDenominator, kLatticeTol);
      if (!r) return std::nullopt;
      const std::int64_t den = r->second / std::gcd(lcm_den, r->second);
      if (den != 0 && lcm_den > kMaxDenominator / den) return std::nullopt;
      lcm_den *= den;
    }
    info.step = min_abs / static_cast<double>(lcm_den);
  }

  auto to_grid = [&](double v) -> std::optional<std::int64_t> {
    const double q = v / info.step;
    if (std::abs(q) > 9.0e15) return std::nullopt;
    const auto k = static_cast<std::int64_t>(std::llround(q));
    if (std::abs(static_cast<double>(k) * info.step - v) >
        kLatticeTol * std::max(std::abs(v), info.step)) {
      return std::nullopt;
    }
    return k;
  };

  info.increments.reserve(increments.size());
  for (const IncrementSpec& spec : increments) {
    LatticeStepAtoms step;
    for (const Atom& a : spec.atoms()) {
      const auto k = to_grid(a.value);
      if (!k) return std::nullopt;
      step.offsets.push_back(*k);
      step.probs.push_back(a.prob);
    }
    info.increments.push_back(std::move(step));
  }
  info.boundary.reserve(boundary.size());
  for (double g : boundary) {
    const auto k = to_grid(g);
    if (!k) return std::nullopt;
    info.boundary.push_back(*k);
  }
  return info;
}

}  // namespace

std::vector<double> BoundarySpec::resolve(int n, double b_n) const {
  switch (kind) {
    case Kind::zero:
      return std::vector<double>(n, 0.0);
    case Kind::constant_scaled:
      return std::vector<double>(n, constant / b_n);
    case Kind::explicit_array:
      if (static_cast<int>(values.size()) != n) {
        throw SpecError("boundary: explicit array length " +
                        std::to_string(values.size()) + " != n = " +
                        std::to_string(n));
      }
      return values;
  }
  return {};
}

NormalizeResult normalize_sequence(std::span<const double> raw_variances,
                                   std::span<const double> raw_boundary) {
  KahanSum total;
  for (double v : raw_variances) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw SpecError("normalize_sequence: variances must be >= 0 and finite");
    }
    total.add(v);
  }
  const double sum = total.value();
  if (!(sum > 0.0)) {
    throw SpecError("normalize_sequence: total variance is zero");
  }
  NormalizeResult out;
  out.b_n = std::sqrt(sum);
  out.variances.reserve(raw_variances.size());
  for (double v : raw_variances) out.variances.push_back(v / sum);
  out.boundary.reserve(raw_boundary.size());
  for (double g : raw_boundary) out.boundary.push_back(g / out.b_n);
  return out;
}

RowModel RowModel::make(std::vector<IncrementSpec> increments,
                        std::vector<double> boundary, bool require_survivable) {
  const int n = static_cast<int>(increments.size());
  if (n < 1) throw SpecError("row: needs at least one increment");
  if (static_cast<int>(boundary.size()) != n) {
    throw SpecError("row: boundary length != n");
  }
  for (double g : boundary) {
    if (!std::isfinite(g)) throw SpecError("row: boundary values must be finite");
  }

  KahanSum var;
  for (const IncrementSpec& spec : increments) {
    if (spec.variance() == 0.0 &&
        !(spec.atoms().size() == 1 && spec.atoms()[0].value == 0.0)) {
      throw SpecError("row: zero-variance entries must be the constant 0");
    }
    var.add(spec.variance());
  }
  if (std::abs(var.value() - 1.0) > kVarianceTol) {
    throw SpecError("row: variances sum to " + std::to_string(var.value()) +
                    ", need 1 within 1e-9 (normalize first)");
  }

  if (require_survivable) {
    // A path taking the maximal step at every k dominates every other
    // path's prefix sums, so it decides reachability.
    double cum_max = 0.0;
    for (int k = 0; k < n; ++k) {
      cum_max += max_step_value(increments[k]);
      if (!(cum_max > boundary[k])) {
        throw SpecError("row: no path survives to step " + std::to_string(k + 1) +
                        "; P(T_n > n) = 0 is structurally impossible here");
      }
    }
  }

  RowModel row;
  row.lattice_ = detect_lattice_impl(increments, boundary);
  row.increments_ = std::move(increments);
  row.boundary_ = std::move(boundary);
  return row;
}

RowModel RowModel::create(std::vector<IncrementSpec> increments,
                          std::vector<double> boundary) {
  return make(std::move(increments), std::move(boundary), true);
}

RowModel RowModel::create_unchecked(std::vector<IncrementSpec> increments,
                                    std::vector<double> boundary) {
  return make(std::move(increments), std::move(boundary), false);
}

ArrayDiagnostics diagnostics(const RowModel& model) {
  ArrayDiagnostics d;
  for (const IncrementSpec& spec : model.increments()) {
    d.r_n = std::max(d.r_n, spec.support_bound());
  }
  for (double g : model.boundary()) {
    d.g_n_star = std::max(d.g_n_star, std::abs(g));
  }
  d.rho = d.r_n + d.g_n_star;
  KahanSum cum;
  d.B.reserve(model.n());
  d.B_tail.reserve(model.n());
  for (const IncrementSpec& spec : model.increments()) {
    cum.add(spec.variance());
    const double b2 = cum.value();
    d.B.push_back(std::sqrt(b2));
    d.B_tail.push_back(std::sqrt(std::max(0.0, 1.0 - b2)));
  }
  return d;
}

std::optional<LatticeInfo> detect_lattice(const RowModel& model) {
  return detect_lattice_impl(model.increments(), model.boundary());
}

}  // namespace fpt
