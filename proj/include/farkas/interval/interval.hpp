#pragma once

// Interval operator equations between coordinate spaces. The order on m x n
// matrices is entrywise, so an interval [lower, upper] is a pair of matrices
// with lower <= upper in every entry.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "farkas/model/kantorovich.hpp"
#include "farkas/scalar/scalar.hpp"
#include "farkas/support/options.hpp"

namespace farkas {

struct IntervalOperator {
  RatMatrix lower;
  RatMatrix upper;

  static IntervalOperator point(const RatMatrix& t) { return {t, t}; }
  std::size_t rows() const { return lower.rows(); }
  std::size_t cols() const { return lower.cols(); }
  bool contains(const RatMatrix& t) const;
  /// Throws std::invalid_argument on a shape mismatch or lower > upper somewhere.
  void validate() const;
};

/// upper * x_+ - lower * x_- with x_+ = max(x, 0) and x_- = max(-x, 0).
RatVector p_transform(const IntervalOperator& t, const RatVector& x);

/// A nonnegative matrix with a single nonzero entry.
struct SingleEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

/// upper - lower split into its nonzero entries. Single-entry matrices at
/// distinct positions are pairwise disjoint in the entrywise lattice, so every
/// interval here is adapted and the decomposition always exists.
std::vector<SingleEntry> adapted_decomposition(const IntervalOperator& t);

/// Sign pattern of an orthant; negative[j] means x_j <= 0.
struct OrthantSign {
  std::vector<bool> negative;

  static OrthantSign from_index(std::size_t n, std::size_t index);
  bool contains(const RatVector& x) const;
  std::string str() const;  // e.g. "+-+"
};

struct IntervalHolds {};

/// At `stratum`, x lies in `orthant`, every P_{A_k}(-x)_i <= 0 and P_B(x)_i <= -1.
struct IntervalFailsAt {
  std::size_t stratum = 0;
  OrthantSign orthant;
  RatVector x;
};

/// Thrown when the domain dimension exceeds the orthant cap.
class OrthantCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Does {P_B >= 0} contain the intersection of {P_{A_k}(-x) <= 0}? Each
/// stratum and orthant is one LP; the least failing (stratum, orthant) is reported.
std::variant<IntervalHolds, IntervalFailsAt> interval_condition(const std::vector<IntervalOperator>& a_list,
                                                               const IntervalOperator& b,
                                                               const SolveOptions& options = {});

/// B_choice = sum alpha_k A_choices[k] with every choice inside its interval.
struct WeakSolution {
  std::vector<Orthomorphism> alphas;
  std::vector<RatMatrix> a_choices;
  RatMatrix b_choice;
};

/// The per-stratum system (alpha, w, b) has no solution at `stratum`.
struct NoWeakSolution {
  std::size_t stratum = 0;
  Inconsistent certificate;
};

std::variant<WeakSolution, NoWeakSolution> weak_solution(const std::vector<IntervalOperator>& a_list,
                                                         const IntervalOperator& b, const SolveOptions& options = {});

bool verify_weak_solution(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b,
                          const WeakSolution& sol);
bool verify_fails_at(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b, const IntervalFailsAt& f);

struct EquivalenceReport {
  std::variant<IntervalHolds, IntervalFailsAt> condition;
  std::variant<WeakSolution, NoWeakSolution> solution;
};

/// Thrown when the condition and the weak solution disagree.
class EquivalenceViolation : public std::logic_error {
 public:
  explicit EquivalenceViolation(EquivalenceReport report);
  const EquivalenceReport& report() const { return report_; }

 private:
  EquivalenceReport report_;
};

/// Runs both sides and checks that they agree.
EquivalenceReport interval_equivalence_check(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b,
                                             const SolveOptions& options = {});

}  // namespace farkas
