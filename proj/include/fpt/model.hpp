// model.hpp - one row of the triangular array: n increment specs plus a
// moving boundary, with the diagnostics (r_n, g_n*, B_k) that drive every
// bound. Rows are normalized: the variances sum to 1.

#ifndef FPT_MODEL_HPP
#define FPT_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpt/dist.hpp"

namespace fpt {

// Boundary description prior to scaling. `resolve` yields the scaled
// values g_{k,n}, k = 1..n.
struct BoundarySpec {
  enum class Kind { zero, constant_scaled, explicit_array };

  Kind kind = Kind::zero;
  double constant = 0.0;             // raw g, divided by B_n on resolve
  std::vector<double> values;        // explicit, already in scaled units

  static BoundarySpec zero() { return {}; }
  static BoundarySpec constant_scaled(double g_raw) {
    BoundarySpec b;
    b.kind = Kind::constant_scaled;
    b.constant = g_raw;
    return b;
  }
  static BoundarySpec explicit_array(std::vector<double> scaled_values) {
    BoundarySpec b;
    b.kind = Kind::explicit_array;
    b.values = std::move(scaled_values);
    return b;
  }

  std::vector<double> resolve(int n, double b_n) const;

  bool operator==(const BoundarySpec&) const = default;
};

// Integer-lattice representation of a row: each atom value and boundary
// value equals an integer multiple of the common step.
struct LatticeStepAtoms {
  std::vector<std::int64_t> offsets;
  std::vector<double> probs;
  bool operator==(const LatticeStepAtoms&) const = default;
};

struct LatticeInfo {
  double step = 1.0;                        // h, in scaled units
  std::vector<LatticeStepAtoms> increments; // per k
  std::vector<std::int64_t> boundary;       // G_k with g_{k,n} = G_k * step
  bool operator==(const LatticeInfo&) const = default;
};

struct ArrayDiagnostics {
  double r_n = 0.0;       // uniform a.s. bound on |X_{i,n}|
  double g_n_star = 0.0;  // max_k |g_{k,n}|
  double rho = 0.0;       // r_n + g_n_star
  std::vector<double> B;       // B_k = (sum_{i<=k} var)^{1/2}
  std::vector<double> B_tail;  // B_{k,n} = (1 - B_k^2)^{1/2}
};

struct NormalizeResult {
  double b_n = 0.0;
  std::vector<double> variances;  // scaled, sum to 1
  std::vector<double> boundary;   // scaled
};

// Scales a raw variance/boundary sequence to the normalized form:
// B_n = (sum var)^{1/2}, variances divided by B_n^2, boundary by B_n.
NormalizeResult normalize_sequence(std::span<const double> raw_variances,
                                   std::span<const double> raw_boundary);

// Immutable row. Construction validates the normalization (variances sum
// to 1 within 1e-9), that zero-variance entries are the constant 0, and
// that a surviving path exists (there is a path strictly above the
// boundary at every step). Lattice detection runs once at construction.
class RowModel {
 public:
  static RowModel create(std::vector<IncrementSpec> increments,
                         std::vector<double> boundary);

  // Skips the surviving-path requirement; for models that are degenerate
  // by design (every path crosses immediately). All other checks apply.
  static RowModel create_unchecked(std::vector<IncrementSpec> increments,
                                   std::vector<double> boundary);

  int n() const { return static_cast<int>(increments_.size()); }
  const std::vector<IncrementSpec>& increments() const { return increments_; }
  const std::vector<double>& boundary() const { return boundary_; }
  const std::optional<LatticeInfo>& lattice() const { return lattice_; }

  bool operator==(const RowModel&) const = default;

 private:
  RowModel() = default;
  static RowModel make(std::vector<IncrementSpec> increments,
                       std::vector<double> boundary, bool require_survivable);

  std::vector<IncrementSpec> increments_;
  std::vector<double> boundary_;
  std::optional<LatticeInfo> lattice_;
};

ArrayDiagnostics diagnostics(const RowModel& model);

// Finds a common lattice step covering every atom and boundary value, via
// rational reduction with denominators <= 1e6. Absent when any increment
// is continuous or no common step exists.
std::optional<LatticeInfo> detect_lattice(const RowModel& model);

}  // namespace fpt

#endif  // FPT_MODEL_HPP
