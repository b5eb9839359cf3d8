// exact.hpp - exact dynamic programming over lattice walks: survival
// distributions P(T > m), the boundary functional E_n in both of its
// forms, overshoot functionals, and the reflection / martingale / local-CLT
// identities for the simple symmetric random walk.

#ifndef FPT_EXACT_HPP
#define FPT_EXACT_HPP

#include <cstdint>
#include <vector>

#include "fpt/dist.hpp"
#include "fpt/model.hpp"

namespace fpt {

inline constexpr std::uint64_t kDefaultCellUpdateGuard = 2'000'000'000ULL;

struct ExitResult {
  std::vector<double> survival;  // survival[k-1] = P(T > k), k = 1..n
  double e_n = 0.0;              // E[S_{n,n} - g_{n,n}; T_n > n]
  double e_n_alt = 0.0;          // E[-S_{T,n}; T <= n] - g_{n,n} P(T_n > n)
  double neg_overshoot = 0.0;    // E[-S_{T,n}; T <= n]
  double p_survive = 0.0;        // = survival.back()
};

// Full sweep over the row's lattice. Requires lattice_info; throws
// EngineError without it and ResourceError when the projected work
// exceeds the cell-update guard. Survival masses are accumulated with
// compensated summation; crossing mass is charged at the crossing step.
ExitResult exit_exact(const RowModel& model,
                      std::uint64_t max_cell_updates = kDefaultCellUpdateGuard);

// Both sides of the reflection identity for the SSRW with m steps:
// lhs = P(N + min_{k<=m} U_k > 0) by survival DP,
// rhs = P(-N < U_m <= N) from the unrestricted table.
struct ReflectionPair {
  double lhs = 0.0;
  double rhs = 0.0;
};
ReflectionPair reflection_check(int N, int m);

// One DP sweep per N; entry [m-1] holds the pair for that horizon.
std::vector<ReflectionPair> reflection_sweep(int N, int m_max);

// E[(N + U_m) 1{N + min U_k > 0}]; equals N for every m, N >= 1.
double martingale_check(int N, int m);
std::vector<double> martingale_sweep(int N, int m_max);

struct OvershootExact {
  double partial_expectation = 0.0;  // E[-(S_tau - g); tau <= H]
  double survive_prob = 0.0;         // P(tau > H)
};

// Exact overshoot for a lattice walk with iid steps against a constant
// boundary. The atom overload does not require a centered distribution.
OvershootExact overshoot_exact(const std::vector<Atom>& step_atoms,
                               double boundary, int horizon,
                               std::uint64_t max_cell_updates = kDefaultCellUpdateGuard);
OvershootExact overshoot_exact(const IncrementSpec& increment, double boundary,
                               int horizon,
                               std::uint64_t max_cell_updates = kDefaultCellUpdateGuard);

// Unrestricted SSRW distribution after m steps; index x + m holds
// P(U_m = x) for x in [-m, m].
std::vector<double> ssrw_distribution(int m);

// P(lo < U_m <= hi) from a table produced by ssrw_distribution.
double ssrw_interval_prob(const std::vector<double>& table, int m,
                          long long lo_exclusive, long long hi_inclusive);

struct LocalCltReport {
  double max_rel_dev = 0.0;  // sup over grid of |P(-N < U_m <= N)/Psi(N/sqrt(m)) - 1|
  int argmax_N = 0;
};
LocalCltReport local_clt_check(int m, const std::vector<int>& N_grid);

struct MassCheck {
  double max_unrestricted_dev = 0.0;  // max_k |sum_x u_k(x) - 1|
  double max_filtered_dev = 0.0;      // max_k |sum_x f_k(x) + P(T <= k) - 1|
};
MassCheck mass_conservation_check(const RowModel& model,
                                  std::uint64_t max_cell_updates = kDefaultCellUpdateGuard);

}  // namespace fpt

#endif  // FPT_EXACT_HPP
