#include "fpt/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fpt/errors.hpp"
#include "fpt/normal.hpp"
#include "fpt/numeric.hpp"

namespace fpt {

namespace {

// Dense mass table over an integer state interval, advanced one
// convolution step at a time. States below a filter level are removed and
// their mass charged to the crossing accumulators at that step.
class LatticeWalker {
 public:
  LatticeWalker(std::int64_t start, std::int64_t final_lo, std::int64_t final_hi)
      : base_(final_lo),
        cur_(static_cast<std::size_t>(final_hi - final_lo + 1), 0.0),
        nxt_(cur_.size(), 0.0),
        lo_(start),
        hi_(start) {
    cur_[idx(start)] = 1.0;
  }

  void step(const LatticeStepAtoms& atoms) {
    const std::int64_t min_off =
        *std::min_element(atoms.offsets.begin(), atoms.offsets.end());
    const std::int64_t max_off =
        *std::max_element(atoms.offsets.begin(), atoms.offsets.end());
    const std::int64_t lo2 = lo_ + min_off;
    const std::int64_t hi2 = hi_ + max_off;
    std::fill(nxt_.begin() + idx(lo2), nxt_.begin() + idx(hi2) + 1, 0.0);
    const std::size_t n_atoms = atoms.offsets.size();
    for (std::int64_t x = lo_; x <= hi_; ++x) {
      const double f = cur_[idx(x)];
      if (f == 0.0) continue;
      for (std::size_t a = 0; a < n_atoms; ++a) {
        nxt_[idx(x + atoms.offsets[a])] += f * atoms.probs[a];
      }
    }
    cur_.swap(nxt_);
    lo_ = lo2;
    hi_ = hi2;
  }

  struct CrossMass {
    double mass = 0.0;
    double neg_weighted = 0.0;  // sum of (-x) * mass over removed states
  };

  CrossMass filter(std::int64_t level) {
    CrossMass out;
    if (level < lo_) return out;
    KahanSum mass, neg;
    const std::int64_t top = std::min(level, hi_);
    for (std::int64_t x = lo_; x <= top; ++x) {
      const double f = cur_[idx(x)];
      if (f == 0.0) continue;
      mass.add(f);
      neg.add(-static_cast<double>(x) * f);
      cur_[idx(x)] = 0.0;
    }
    out.mass = mass.value();
    out.neg_weighted = neg.value();
    lo_ = std::min(level + 1, hi_);
    return out;
  }

  double total() const {
    KahanSum s;
    for (std::int64_t x = lo_; x <= hi_; ++x) s.add(cur_[idx(x)]);
    return s.value();
  }

  // sum of (x - ref) * f(x)
  double expectation_minus(std::int64_t ref) const {
    KahanSum s;
    for (std::int64_t x = lo_; x <= hi_; ++x) {
      const double f = cur_[idx(x)];
      if (f != 0.0) s.add(static_cast<double>(x - ref) * f);
    }
    return s.value();
  }

  // sum of x * f(x)
  double first_moment() const { return expectation_minus(0); }

  double mass_at(std::int64_t x) const {
    if (x < lo_ || x > hi_) return 0.0;
    return cur_[idx(x)];
  }

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

 private:
  std::size_t idx(std::int64_t x) const {
    return static_cast<std::size_t>(x - base_);
  }

  std::int64_t base_;
  std::vector<double> cur_, nxt_;
  std::int64_t lo_, hi_;
};

struct SweepPlan {
  std::int64_t final_lo = 0;
  std::int64_t final_hi = 0;
  std::uint64_t cell_updates = 0;
};

SweepPlan plan_sweep(const std::vector<LatticeStepAtoms>& steps,
                     std::int64_t start) {
  SweepPlan plan;
  std::int64_t lo = start, hi = start;
  for (const LatticeStepAtoms& atoms : steps) {
    if (atoms.offsets.empty()) throw SpecError("lattice step with no atoms");
    lo += *std::min_element(atoms.offsets.begin(), atoms.offsets.end());
    hi += *std::max_element(atoms.offsets.begin(), atoms.offsets.end());
    plan.cell_updates += static_cast<std::uint64_t>(hi - lo + 1) *
                         static_cast<std::uint64_t>(atoms.offsets.size());
  }
  plan.final_lo = std::min(lo, start);
  plan.final_hi = std::max(hi, start);
  return plan;
}

LatticeStepAtoms ssrw_step() {
  LatticeStepAtoms s;
  s.offsets = {+1, -1};
  s.probs = {0.5, 0.5};
  return s;
}

std::vector<Atom> validated_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) throw SpecError("overshoot: empty atom list");
  KahanSum total;
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.value) || !(a.prob > 0.0) || a.prob > 1.0) {
      throw SpecError("overshoot: atom probabilities must lie in (0, 1]");
    }
    total.add(a.prob);
  }
  if (std::abs(total.value() - 1.0) > 1e-12) {
    throw SpecError("overshoot: atom probabilities must sum to 1");
  }
  return atoms;
}

}  // namespace

ExitResult exit_exact(const RowModel& model, std::uint64_t max_cell_updates) {
  const auto& lat = model.lattice();
  if (!lat) {
    throw EngineError("exit_exact: model has no common lattice; use the MC engine");
  }
  const int n = model.n();
  const SweepPlan plan = plan_sweep(lat->increments, 0);
  if (plan.cell_updates > max_cell_updates) {
    throw ResourceError("exit_exact: " + std::to_string(plan.cell_updates) +
                        " cell updates exceed the guard of " +
                        std::to_string(max_cell_updates));
  }

  LatticeWalker walker(0, plan.final_lo, plan.final_hi);
  KahanSum neg_cross;
  ExitResult out;
  out.survival.resize(n);
  for (int k = 0; k < n; ++k) {
    walker.step(lat->increments[k]);
    const auto cross = walker.filter(lat->boundary[k]);
    neg_cross.add(cross.neg_weighted);
    out.survival[k] = walker.total();
  }
  const double h = lat->step;
  const double g_n = model.boundary().back();
  out.p_survive = out.survival.back();
  out.e_n = h * walker.expectation_minus(lat->boundary[n - 1]);
  out.neg_overshoot = h * neg_cross.value();
  out.e_n_alt = out.neg_overshoot - g_n * out.p_survive;
  return out;
}

std::vector<ReflectionPair> reflection_sweep(int N, int m_max) {
  if (N < 1 || m_max < 1) throw SpecError("reflection: need N, m >= 1");
  // Survival walker started at N against level 0, and the unrestricted
  // walk from 0 for the interval probabilities.
  LatticeWalker surv(N, N - m_max, N + m_max);
  LatticeWalker free_walk(0, -m_max, m_max);
  const LatticeStepAtoms step = ssrw_step();
  std::vector<ReflectionPair> out(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    surv.step(step);
    surv.filter(0);
    free_walk.step(step);
    KahanSum rhs;
    for (std::int64_t x = -N + 1; x <= N; ++x) rhs.add(free_walk.mass_at(x));
    out[m - 1].lhs = surv.total();
    out[m - 1].rhs = rhs.value();
  }
  return out;
}

ReflectionPair reflection_check(int N, int m) {
  return reflection_sweep(N, m).back();
}

std::vector<double> martingale_sweep(int N, int m_max) {
  if (N < 1 || m_max < 1) throw SpecError("martingale: need N, m >= 1");
  LatticeWalker surv(N, N - m_max, N + m_max);
  const LatticeStepAtoms step = ssrw_step();
  std::vector<double> out(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    surv.step(step);
    surv.filter(0);
    out[m - 1] = surv.first_moment();
  }
  return out;
}

double martingale_check(int N, int m) { return martingale_sweep(N, m).back(); }

OvershootExact overshoot_exact(const std::vector<Atom>& step_atoms,
                               double boundary, int horizon,
                               std::uint64_t max_cell_updates) {
  if (horizon < 1) throw SpecError("overshoot: horizon must be >= 1");
  const std::vector<Atom> atoms = validated_atoms(step_atoms);

  std::vector<double> values;
  for (const Atom& a : atoms) values.push_back(a.value);
  values.push_back(boundary);
  const auto step_opt = common_lattice_step(values);
  if (!step_opt) {
    throw SpecError("overshoot_exact: increments/boundary are not on a common lattice");
  }
  const double h = *step_opt;

  LatticeStepAtoms step;
  for (const Atom& a : atoms) {
    const auto k = lattice_index(a.value, h);
    if (!k) throw SpecError("overshoot_exact: atom off the lattice");
    step.offsets.push_back(*k);
    step.probs.push_back(a.prob);
  }
  const auto level_opt = lattice_index(boundary, h);
  if (!level_opt) throw SpecError("overshoot_exact: boundary off the lattice");
  const std::int64_t level = *level_opt;

  const std::vector<LatticeStepAtoms> steps(static_cast<std::size_t>(horizon), step);
  const SweepPlan plan = plan_sweep(steps, 0);
  if (plan.cell_updates > max_cell_updates) {
    throw ResourceError("overshoot_exact: work exceeds the cell-update guard");
  }

  LatticeWalker walker(0, plan.final_lo, plan.final_hi);
  KahanSum neg_cross;
  double survive = 0.0;
  for (int k = 0; k < horizon; ++k) {
    walker.step(step);
    const auto cross = walker.filter(level);
    neg_cross.add(cross.neg_weighted);
    survive = walker.total();
    if (survive == 0.0) break;
  }
  OvershootExact out;
  out.partial_expectation = h * neg_cross.value();
  out.survive_prob = survive;
  return out;
}

OvershootExact overshoot_exact(const IncrementSpec& increment, double boundary,
                               int horizon, std::uint64_t max_cell_updates) {
  if (!increment.is_discrete()) {
    throw SpecError("overshoot_exact: continuous increments have no lattice");
  }
  return overshoot_exact(increment.atoms(), boundary, horizon, max_cell_updates);
}

std::vector<double> ssrw_distribution(int m) {
  if (m < 1) throw SpecError("ssrw_distribution: need m >= 1");
  LatticeWalker walker(0, -m, m);
  const LatticeStepAtoms step = ssrw_step();
  for (int k = 0; k < m; ++k) walker.step(step);
  std::vector<double> out(static_cast<std::size_t>(2 * m + 1));
  for (int x = -m; x <= m; ++x) {
    out[static_cast<std::size_t>(x + m)] = walker.mass_at(x);
  }
  return out;
}

double ssrw_interval_prob(const std::vector<double>& table, int m,
                          long long lo_exclusive, long long hi_inclusive) {
  KahanSum s;
  const long long lo = std::max<long long>(lo_exclusive + 1, -m);
  const long long hi = std::min<long long>(hi_inclusive, m);
  for (long long x = lo; x <= hi; ++x) {
    s.add(table[static_cast<std::size_t>(x + m)]);
  }
  return s.value();
}

LocalCltReport local_clt_check(int m, const std::vector<int>& N_grid) {
  if (m < 2) throw SpecError("local_clt_check: need m >= 2");
  const std::vector<double> table = ssrw_distribution(m);
  const double sqrt_m = std::sqrt(static_cast<double>(m));
  LocalCltReport report;
  for (int N : N_grid) {
    if (N < 1) continue;
    const double p = ssrw_interval_prob(table, m, -N, N);
    const double psi = Psi(static_cast<double>(N) / sqrt_m);
    const double dev = std::abs(p / psi - 1.0);
    if (dev > report.max_rel_dev) {
      report.max_rel_dev = dev;
      report.argmax_N = N;
    }
  }
  return report;
}

MassCheck mass_conservation_check(const RowModel& model,
                                  std::uint64_t max_cell_updates) {
  const auto& lat = model.lattice();
  if (!lat) throw EngineError("mass_conservation_check: no lattice");
  const SweepPlan plan = plan_sweep(lat->increments, 0);
  if (2 * plan.cell_updates > max_cell_updates) {
    throw ResourceError("mass_conservation_check: work exceeds the guard");
  }

  LatticeWalker filtered(0, plan.final_lo, plan.final_hi);
  LatticeWalker unrestricted(0, plan.final_lo, plan.final_hi);
  KahanSum crossed;
  MassCheck out;
  for (int k = 0; k < model.n(); ++k) {
    filtered.step(lat->increments[k]);
    unrestricted.step(lat->increments[k]);
    crossed.add(filtered.filter(lat->boundary[k]).mass);
    out.max_unrestricted_dev = std::max(
        out.max_unrestricted_dev, std::abs(unrestricted.total() - 1.0));
    out.max_filtered_dev = std::max(
        out.max_filtered_dev,
        std::abs(filtered.total() + crossed.value() - 1.0));
  }
  return out;
}

}  // namespace fpt
