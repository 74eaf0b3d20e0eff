#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "farkas/exact/matrix.hpp"

namespace farkas::lp {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };
enum class ObjectiveSense { kMinimize, kMaximize };

/// Rows `a * x (sense) b` with an optional linear objective. Variables are
/// free unless flagged in `nonnegative` (empty means all free).
struct LinearProgram {
  RatMatrix a;
  RatVector b;
  std::vector<RowSense> senses;
  std::optional<RatVector> objective;
  ObjectiveSense objective_sense = ObjectiveSense::kMaximize;
  std::vector<bool> nonnegative;

  std::size_t num_rows() const { return a.rows(); }
  std::size_t num_vars() const { return a.cols(); }
  bool is_nonnegative(std::size_t j) const { return !nonnegative.empty() && nonnegative[j]; }
  /// Throws std::invalid_argument when shapes disagree.
  void validate() const;
};

/// Incremental row-by-row construction of a LinearProgram.
class LpBuilder {
 public:
  explicit LpBuilder(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }

  /// Dense row; coeffs.dim() must equal num_vars().
  LpBuilder& add_row(RatVector coeffs, RowSense sense, Rational rhs);
  /// Sparse row given as (variable, coefficient) pairs; repeated variables accumulate.
  LpBuilder& add_sparse(const std::vector<std::pair<std::size_t, Rational>>& terms, RowSense sense,
                        Rational rhs);
  LpBuilder& set_objective(RatVector c, ObjectiveSense sense);
  /// Restricts variables [first, first + count) to be >= 0.
  LpBuilder& nonnegative(std::size_t first, std::size_t count = 1);

  LinearProgram build() const;

 private:
  std::size_t num_vars_;
  std::vector<RatVector> rows_;
  std::vector<RowSense> senses_;
  std::vector<Rational> rhs_;
  std::optional<RatVector> objective_;
  ObjectiveSense objective_sense_ = ObjectiveSense::kMaximize;
  std::vector<bool> nonnegative_;
};

struct Feasible {
  RatVector x;
};

/// `duals` has one entry per row with duals^T b = value. On free columns
/// duals^T a equals the objective; on nonnegative columns it is >= the
/// objective when maximizing and <= when minimizing. Row signs follow the
/// usual LP dual for the row senses.
struct Optimal {
  RatVector x;
  Rational value;
  RatVector duals;
};

/// `x` is feasible; x + s * ray stays feasible for s >= 0 and the objective
/// improves strictly along `ray`.
struct Unbounded {
  RatVector x;
  RatVector ray;
};

/// `farkas` proves the rows inconsistent: farkas^T b > 0, farkas_i >= 0 on >=
/// rows, <= 0 on <= rows, free on = rows, and farkas^T a is 0 on free columns
/// and <= 0 on nonnegative columns. Aggregating the rows with these weights
/// yields the contradiction 0 >= farkas^T b > 0.
struct Infeasible {
  RatVector farkas;
};

using LpOutcome = std::variant<Feasible, Optimal, Unbounded, Infeasible>;

/// Thrown when the pivot count exceeds the number of bases; Bland's rule makes
/// this unreachable, so it signals a defect.
class PivotCapExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Feasible or Infeasible. Ignores any objective.
LpOutcome feasible(const LinearProgram& lp);

/// Optimal, Unbounded, or Infeasible. Requires an objective.
LpOutcome optimize(const LinearProgram& lp);

struct StrictFeasible {
  RatVector x;  // rows_le * x <= 0, <target, x> >= 1
};
struct StrictInfeasible {
  RatVector multipliers;  // >= 0, target = multipliers^T rows_le
};

/// Decides whether {rows_le * x <= 0, <target, x> > 0} is nonempty, using
/// the normalization <target, x> >= 1.
std::variant<StrictFeasible, StrictInfeasible> strict_homogeneous_feasible(const RatMatrix& rows_le,
                                                                           const RatVector& target);

/// Exact check of an infeasibility certificate in the convention of Infeasible.
bool verify_farkas_certificate(const LinearProgram& lp, const RatVector& y);

/// Exact feasibility check of a point.
bool satisfies(const LinearProgram& lp, const RatVector& x);

struct Counters {
  std::uint64_t solves = 0;
  std::uint64_t pivots = 0;
};

/// Process-wide totals, safe to read from any thread.
Counters counters();
void reset_counters();

}  // namespace farkas::lp
