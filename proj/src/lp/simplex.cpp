// Two-phase primal simplex over exact rationals with Bland's rule.
//
// Standard form: every free variable x_j is split into x+_j - x-_j (the x-
// column of a nonnegative variable stays zero and never enters), inequality
// rows get a slack, rows with negative right-hand side are negated, and every
// row receives an artificial column. The artificial columns are kept for the
// whole run; they start as the identity, so they always hold B^-1 and the
// row duals can be read off them.

#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "farkas/lp/linear_program.hpp"

namespace farkas::lp {

namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_pivots{0};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::uint64_t saturating_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  constexpr unsigned __int128 kCap = std::numeric_limits<std::uint64_t>::max() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > kCap) return static_cast<std::uint64_t>(kCap);
  }
  return static_cast<std::uint64_t>(result);
}

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp);

  enum class RunResult { kOptimal, kUnbounded };

  // Minimizes cost^T z over columns [0, enter_limit); returns the unbounded
  // entering column through `unbounded_col`.
  RunResult run(const std::vector<Rational>& cost, std::size_t enter_limit, std::size_t& unbounded_col);

  // Phase 1. True when the rows are consistent; otherwise fills `farkas`.
  bool phase_one(RatVector& farkas);
  void drive_out_artificials();

  RatVector primal_point() const;
  RatVector primal_ray(std::size_t entering) const;
  // pi = cost_B^T B^-1, mapped back to original rows (pre-negation).
  RatVector row_duals(const std::vector<Rational>& cost) const;

  std::size_t art_start() const { return art_start_; }
  std::size_t total_cols() const { return total_; }
  std::size_t num_vars() const { return n_; }

 private:
  void pivot(std::size_t row, std::size_t col);
  void price(const std::vector<Rational>& cost);

  std::size_t n_ = 0;
  std::size_t rows_ = 0;
  std::size_t art_start_ = 0;
  std::size_t total_ = 0;
  std::vector<int> row_sign_;
  std::vector<std::vector<Rational>> t_;  // rows_ x (total_ + 1); last entry is the rhs
  std::vector<Rational> obj_;              // reduced costs; last entry is -objective
  std::vector<std::size_t> basis_;
  std::uint64_t pivot_cap_ = 0;
  std::uint64_t pivots_ = 0;
};

Tableau::Tableau(const LinearProgram& lp) : n_(lp.num_vars()), rows_(lp.num_rows()) {
  std::size_t slacks = 0;
  for (auto s : lp.senses) {
    if (s != RowSense::kEqual) ++slacks;
  }
  art_start_ = 2 * n_ + slacks;
  total_ = art_start_ + rows_;
  t_.assign(rows_, std::vector<Rational>(total_ + 1));
  row_sign_.assign(rows_, 1);
  basis_.assign(rows_, kNone);

  std::size_t slack = 2 * n_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const int sigma = lp.b[i].sign() < 0 ? -1 : 1;
    row_sign_[i] = sigma;
    auto& row = t_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& a = lp.a(i, j);
      if (a.is_zero()) continue;
      row[j] = sigma < 0 ? -a : a;
      if (!lp.is_nonnegative(j)) row[n_ + j] = -row[j];
    }
    if (lp.senses[i] != RowSense::kEqual) {
      const int e = lp.senses[i] == RowSense::kLessEqual ? 1 : -1;
      row[slack++] = e * sigma;
    }
    row[art_start_ + i] = 1;
    row[total_] = sigma < 0 ? -lp.b[i] : lp.b[i];
    basis_[i] = art_start_ + i;
  }
  pivot_cap_ = saturating_binomial(total_, rows_) + 1;
}

void Tableau::pivot(std::size_t row, std::size_t col) {
  if (++pivots_ > pivot_cap_) {
    throw PivotCapExceeded("simplex exceeded " + std::to_string(pivot_cap_) + " pivots");
  }
  g_pivots.fetch_add(1, std::memory_order_relaxed);

  auto& prow = t_[row];
  const Rational inv = Rational(1) / prow[col];
  for (auto& e : prow) {
    if (!e.is_zero()) e *= inv;
  }
  auto eliminate = [&](std::vector<Rational>& target) {
    if (target[col].is_zero()) return;
    const Rational factor = target[col];
    for (std::size_t c = 0; c <= total_; ++c) {
      if (!prow[c].is_zero()) target[c] -= factor * prow[c];
    }
  };
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r != row) eliminate(t_[r]);
  }
  eliminate(obj_);
  basis_[row] = col;
}

void Tableau::price(const std::vector<Rational>& cost) {
  obj_.assign(total_ + 1, Rational());
  for (std::size_t j = 0; j < total_; ++j) obj_[j] = cost[j];
  for (std::size_t r = 0; r < rows_; ++r) {
    const Rational& cb = cost[basis_[r]];
    if (cb.is_zero()) continue;
    for (std::size_t c = 0; c <= total_; ++c) {
      if (!t_[r][c].is_zero()) obj_[c] -= cb * t_[r][c];
    }
  }
}

Tableau::RunResult Tableau::run(const std::vector<Rational>& cost, std::size_t enter_limit,
                                std::size_t& unbounded_col) {
  pivots_ = 0;
  price(cost);
  for (;;) {
    // Bland: lowest-index improving column.
    std::size_t entering = kNone;
    for (std::size_t j = 0; j < enter_limit; ++j) {
      if (obj_[j].sign() < 0) {
        entering = j;
        break;
      }
    }
    if (entering == kNone) return RunResult::kOptimal;

    // Bland: among minimum ratios, the row whose basic variable has the lowest index.
    std::size_t leaving = kNone;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& coef = t_[r][entering];
      if (coef.sign() <= 0) continue;
      Rational ratio = t_[r][total_] / coef;
      if (leaving == kNone || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == kNone) {
      unbounded_col = entering;
      return RunResult::kUnbounded;
    }
    pivot(leaving, entering);
  }
}

bool Tableau::phase_one(RatVector& farkas) {
  std::vector<Rational> cost(total_);
  for (std::size_t i = art_start_; i < total_; ++i) cost[i] = 1;
  std::size_t unused = kNone;
  if (run(cost, art_start_, unused) != RunResult::kOptimal) {
    throw std::logic_error("phase one cannot be unbounded");
  }
  if (obj_[total_].is_zero()) return true;
  farkas = row_duals(cost);
  return false;
}

void Tableau::drive_out_artificials() {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (basis_[r] < art_start_) continue;
    for (std::size_t j = 0; j < art_start_; ++j) {
      if (!t_[r][j].is_zero()) {
        pivot(r, j);
        break;
      }
    }
    // A row with no nonzero structural entry is redundant: its artificial
    // stays basic at zero and no later pivot can touch it.
  }
}

RatVector Tableau::primal_point() const {
  std::vector<Rational> z(total_);
  for (std::size_t r = 0; r < rows_; ++r) z[basis_[r]] = t_[r][total_];
  RatVector x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = z[j] - z[n_ + j];
  return x;
}

RatVector Tableau::primal_ray(std::size_t entering) const {
  std::vector<Rational> z(total_);
  z[entering] = 1;
  for (std::size_t r = 0; r < rows_; ++r) z[basis_[r]] = -t_[r][entering];
  RatVector ray(n_);
  for (std::size_t j = 0; j < n_; ++j) ray[j] = z[j] - z[n_ + j];
  return ray;
}

RatVector Tableau::row_duals(const std::vector<Rational>& cost) const {
  RatVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational pi;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = cost[basis_[r]];
      const Rational& binv = t_[r][art_start_ + i];
      if (!cb.is_zero() && !binv.is_zero()) pi += cb * binv;
    }
    y[i] = row_sign_[i] < 0 ? -pi : pi;
  }
  return y;
}

std::vector<Rational> phase_two_cost(const LinearProgram& lp, const Tableau& tab) {
  std::vector<Rational> cost(tab.total_cols());
  const bool maximize = lp.objective_sense == ObjectiveSense::kMaximize;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    const Rational& c = (*lp.objective)[j];
    cost[j] = maximize ? -c : c;
    if (!lp.is_nonnegative(j)) cost[lp.num_vars() + j] = -cost[j];
  }
  return cost;
}

bool dual_feasible(const LinearProgram& lp, const RatVector& duals) {
  const RatVector reduced = lp.a.transpose() * duals;
  const bool maximize = lp.objective_sense == ObjectiveSense::kMaximize;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    const Rational& c = (*lp.objective)[j];
    if (!lp.is_nonnegative(j)) {
      if (reduced[j] != c) return false;
    } else if (maximize ? reduced[j] < c : reduced[j] > c) {
      return false;
    }
  }
  return true;
}

void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("simplex internal check failed: ") + what);
}

}  // namespace

void LinearProgram::validate() const {
  if (b.dim() != a.rows()) throw std::invalid_argument("LinearProgram: b.dim() != a.rows()");
  if (senses.size() != a.rows()) throw std::invalid_argument("LinearProgram: senses.size() != a.rows()");
  if (objective && objective->dim() != a.cols()) {
    throw std::invalid_argument("LinearProgram: objective dimension != a.cols()");
  }
  if (!nonnegative.empty() && nonnegative.size() != a.cols()) {
    throw std::invalid_argument("LinearProgram: nonnegative.size() != a.cols()");
  }
}

LpBuilder& LpBuilder::add_row(RatVector coeffs, RowSense sense, Rational rhs) {
  if (coeffs.dim() != num_vars_) throw std::invalid_argument("LpBuilder::add_row: dimension mismatch");
  rows_.push_back(std::move(coeffs));
  senses_.push_back(sense);
  rhs_.push_back(std::move(rhs));
  return *this;
}

LpBuilder& LpBuilder::add_sparse(const std::vector<std::pair<std::size_t, Rational>>& terms, RowSense sense,
                                 Rational rhs) {
  RatVector row(num_vars_);
  for (const auto& [var, coef] : terms) {
    if (var >= num_vars_) throw std::out_of_range("LpBuilder::add_sparse: variable out of range");
    row[var] += coef;
  }
  return add_row(std::move(row), sense, std::move(rhs));
}

LpBuilder& LpBuilder::set_objective(RatVector c, ObjectiveSense sense) {
  if (c.dim() != num_vars_) throw std::invalid_argument("LpBuilder::set_objective: dimension mismatch");
  objective_ = std::move(c);
  objective_sense_ = sense;
  return *this;
}

LpBuilder& LpBuilder::nonnegative(std::size_t first, std::size_t count) {
  if (first + count > num_vars_) throw std::out_of_range("LpBuilder::nonnegative: variable out of range");
  if (nonnegative_.empty()) nonnegative_.assign(num_vars_, false);
  for (std::size_t j = first; j < first + count; ++j) nonnegative_[j] = true;
  return *this;
}

LinearProgram LpBuilder::build() const {
  LinearProgram lp;
  lp.a = RatMatrix::from_rows(rows_, num_vars_);
  lp.b = RatVector(rhs_);
  lp.senses = senses_;
  lp.objective = objective_;
  lp.objective_sense = objective_sense_;
  lp.nonnegative = nonnegative_;
  return lp;
}

LpOutcome feasible(const LinearProgram& lp) {
  lp.validate();
  g_solves.fetch_add(1, std::memory_order_relaxed);
  Tableau tab(lp);
  RatVector farkas;
  if (!tab.phase_one(farkas)) {
    internal_check(verify_farkas_certificate(lp, farkas), "phase-one certificate");
    return Infeasible{std::move(farkas)};
  }
  RatVector x = tab.primal_point();
  internal_check(satisfies(lp, x), "phase-one point");
  return Feasible{std::move(x)};
}

LpOutcome optimize(const LinearProgram& lp) {
  lp.validate();
  if (!lp.objective) throw std::invalid_argument("optimize: LinearProgram has no objective");
  g_solves.fetch_add(1, std::memory_order_relaxed);
  Tableau tab(lp);
  RatVector farkas;
  if (!tab.phase_one(farkas)) {
    internal_check(verify_farkas_certificate(lp, farkas), "phase-one certificate");
    return Infeasible{std::move(farkas)};
  }
  tab.drive_out_artificials();

  const std::vector<Rational> cost = phase_two_cost(lp, tab);
  std::size_t entering = kNone;
  if (tab.run(cost, tab.art_start(), entering) == Tableau::RunResult::kUnbounded) {
    Unbounded out{tab.primal_point(), tab.primal_ray(entering)};
    internal_check(satisfies(lp, out.x), "unbounded base point");
    return out;
  }

  Optimal out;
  out.x = tab.primal_point();
  out.value = dot(*lp.objective, out.x);
  out.duals = tab.row_duals(cost);
  if (lp.objective_sense == ObjectiveSense::kMaximize) out.duals = -out.duals;
  internal_check(satisfies(lp, out.x), "optimal point");
  internal_check(dual_feasible(lp, out.duals), "dual reproduces objective");
  internal_check(dot(out.duals, lp.b) == out.value, "strong duality");
  return out;
}

std::variant<StrictFeasible, StrictInfeasible> strict_homogeneous_feasible(const RatMatrix& rows_le,
                                                                           const RatVector& target) {
  if (target.dim() != rows_le.cols()) {
    throw std::invalid_argument("strict_homogeneous_feasible: target dimension mismatch");
  }
  LpBuilder builder(target.dim());
  for (std::size_t r = 0; r < rows_le.rows(); ++r) builder.add_row(rows_le.row(r), RowSense::kLessEqual, 0);
  builder.add_row(target, RowSense::kGreaterEqual, 1);
  const LpOutcome outcome = feasible(builder.build());
  if (const auto* f = std::get_if<Feasible>(&outcome)) return StrictFeasible{f->x};

  // y_last > 0 on the >= row, y_i <= 0 on the <= rows, sum = 0.
  const RatVector& y = std::get<Infeasible>(outcome).farkas;
  const Rational& scale = y[rows_le.rows()];
  RatVector alpha(rows_le.rows());
  for (std::size_t r = 0; r < rows_le.rows(); ++r) alpha[r] = -y[r] / scale;
  return StrictInfeasible{std::move(alpha)};
}

bool verify_farkas_certificate(const LinearProgram& lp, const RatVector& y) {
  if (y.dim() != lp.num_rows() || lp.b.dim() != lp.num_rows() || lp.senses.size() != lp.num_rows()) return false;
  for (std::size_t i = 0; i < y.dim(); ++i) {
    if (lp.senses[i] == RowSense::kLessEqual && y[i].sign() > 0) return false;
    if (lp.senses[i] == RowSense::kGreaterEqual && y[i].sign() < 0) return false;
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    Rational s;
    for (std::size_t i = 0; i < y.dim(); ++i) s += y[i] * lp.a(i, j);
    if (lp.is_nonnegative(j) ? s.sign() > 0 : !s.is_zero()) return false;
  }
  return dot(y, lp.b).sign() > 0;
}

bool satisfies(const LinearProgram& lp, const RatVector& x) {
  if (x.dim() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (lp.is_nonnegative(j) && x[j].sign() < 0) return false;
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      if (!lp.a(i, j).is_zero()) lhs += lp.a(i, j) * x[j];
    }
    switch (lp.senses[i]) {
      case RowSense::kLessEqual:
        if (lhs > lp.b[i]) return false;
        break;
      case RowSense::kEqual:
        if (lhs != lp.b[i]) return false;
        break;
      case RowSense::kGreaterEqual:
        if (lhs < lp.b[i]) return false;
        break;
    }
  }
  return true;
}

Counters counters() {
  return {g_solves.load(std::memory_order_relaxed), g_pivots.load(std::memory_order_relaxed)};
}

void reset_counters() {
  g_solves.store(0, std::memory_order_relaxed);
  g_pivots.store(0, std::memory_order_relaxed);
}

}  // namespace farkas::lp
