#include "farkas/interval/interval.hpp"

#include "farkas/lp/linear_program.hpp"
#include "farkas/support/parallel.hpp"

namespace farkas {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("interval engine produced an invalid artifact: ") + what);
}

void validate_all(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b) {
  b.validate();
  for (const auto& a : a_list) {
    a.validate();
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("interval operators differ in shape");
  }
}

// P_T restricted to an orthant is linear in y = |x|: entry j is upper_ij on a
// positive coordinate and -lower_ij on a negative one.
RatVector orthant_row(const IntervalOperator& t, std::size_t i, const OrthantSign& s) {
  RatVector row(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) row[j] = s.negative[j] ? -t.lower(i, j) : t.upper(i, j);
  return row;
}

// P_T(-x) on the orthant, again in y = |x|.
RatVector reflected_row(const IntervalOperator& t, std::size_t i, const OrthantSign& s) {
  RatVector row(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) row[j] = s.negative[j] ? t.upper(i, j) : -t.lower(i, j);
  return row;
}

std::optional<IntervalFailsAt> check_orthant(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b,
                                             std::size_t i, const OrthantSign& s) {
  const std::size_t n = b.cols();
  lp::LpBuilder builder(n);
  builder.nonnegative(0, n);
  for (const auto& a : a_list) builder.add_row(reflected_row(a, i, s), lp::RowSense::kLessEqual, 0);
  builder.add_row(orthant_row(b, i, s), lp::RowSense::kLessEqual, -1);
  const auto out = lp::feasible(builder.build());
  const auto* point = std::get_if<lp::Feasible>(&out);
  if (point == nullptr) return std::nullopt;
  RatVector x = point->x;
  for (std::size_t j = 0; j < n; ++j) {
    if (s.negative[j]) x[j] = -x[j];
  }
  return IntervalFailsAt{i, s, std::move(x)};
}

}  // namespace

bool IntervalOperator::contains(const RatMatrix& t) const { return leq(lower, t) && leq(t, upper); }

void IntervalOperator::validate() const {
  if (lower.rows() != upper.rows() || lower.cols() != upper.cols()) {
    throw std::invalid_argument("interval: bounds differ in shape");
  }
  if (!leq(lower, upper)) throw std::invalid_argument("interval: lower bound exceeds upper bound");
}

RatVector p_transform(const IntervalOperator& t, const RatVector& x) {
  if (x.dim() != t.cols()) throw std::invalid_argument("p_transform: dimension mismatch");
  RatVector plus(x.dim()), minus(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j].sign() > 0) plus[j] = x[j];
    if (x[j].sign() < 0) minus[j] = -x[j];
  }
  return t.upper * plus - t.lower * minus;
}

std::vector<SingleEntry> adapted_decomposition(const IntervalOperator& t) {
  t.validate();
  std::vector<SingleEntry> out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const Rational d = t.upper(i, j) - t.lower(i, j);
      if (!d.is_zero()) out.push_back({i, j, d});
    }
  }
  return out;
}

OrthantSign OrthantSign::from_index(std::size_t n, std::size_t index) {
  OrthantSign s;
  for (std::size_t j = 0; j < n; ++j) s.negative.push_back(((index >> j) & 1u) != 0);
  return s;
}

bool OrthantSign::contains(const RatVector& x) const {
  if (x.dim() != negative.size()) return false;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j].sign() != 0 && (x[j].sign() < 0) != negative[j]) return false;
  }
  return true;
}

std::string OrthantSign::str() const {
  std::string out;
  for (bool neg : negative) out += neg ? '-' : '+';
  return out;
}

bool verify_fails_at(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b, const IntervalFailsAt& f) {
  if (f.stratum >= b.rows() || f.x.dim() != b.cols() || !f.orthant.contains(f.x)) return false;
  for (const auto& a : a_list) {
    if (p_transform(a, -f.x)[f.stratum].sign() > 0) return false;
  }
  return p_transform(b, f.x)[f.stratum] <= -1;
}

std::variant<IntervalHolds, IntervalFailsAt> interval_condition(const std::vector<IntervalOperator>& a_list,
                                                               const IntervalOperator& b,
                                                               const SolveOptions& options) {
  validate_all(a_list, b);
  const std::size_t n = b.cols();
  if (n > options.orthant_cap || n >= 63) {
    throw OrthantCapExceeded("interval_condition: " + std::to_string(n) + " coordinates exceed the orthant cap of " +
                             std::to_string(options.orthant_cap));
  }
  const std::size_t orthants = std::size_t{1} << n;
  const auto results = parallel_map(b.rows() * orthants, options.jobs, [&](std::size_t job) {
    return check_orthant(a_list, b, job / orthants, OrthantSign::from_index(n, job % orthants));
  });
  for (const auto& r : results) {
    if (r) {
      ensure(verify_fails_at(a_list, b, *r), "orthant witness");
      return *r;
    }
  }
  return IntervalHolds{};
}

bool verify_weak_solution(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b,
                          const WeakSolution& sol) {
  if (sol.alphas.size() != a_list.size() || sol.a_choices.size() != a_list.size()) return false;
  if (!b.contains(sol.b_choice)) return false;
  RatMatrix sum(b.rows(), b.cols());
  for (std::size_t k = 0; k < a_list.size(); ++k) {
    if (sol.alphas[k].size() != b.rows() || !sol.alphas[k].is_positive()) return false;
    if (!a_list[k].contains(sol.a_choices[k])) return false;
    sum += sol.alphas[k].apply(sol.a_choices[k]);
  }
  return sum == sol.b_choice;
}

std::variant<WeakSolution, NoWeakSolution> weak_solution(const std::vector<IntervalOperator>& a_list,
                                                         const IntervalOperator& b, const SolveOptions& options) {
  validate_all(a_list, b);
  const std::size_t nk = a_list.size();
  const std::size_t n = b.cols();
  // Variables per stratum: alpha_k (nk), w_k (nk * n), b (n). Every row is <=
  // so that an infeasible stratum yields an Inconsistent certificate directly.
  const std::size_t vars = nk + nk * n + n;
  auto alpha_at = [](std::size_t k) { return k; };
  auto w_at = [&](std::size_t k, std::size_t j) { return nk + k * n + j; };
  auto b_at = [&](std::size_t j) { return nk + nk * n + j; };

  struct Stratum {
    std::optional<RatVector> x;
    std::optional<Inconsistent> certificate;
  };
  const auto results = parallel_map(b.rows(), options.jobs, [&](std::size_t i) {
    std::vector<RatVector> rows;
    std::vector<Rational> rhs;
    auto add = [&](std::vector<std::pair<std::size_t, Rational>> terms, Rational r) {
      RatVector row(vars);
      for (auto& [c, v] : terms) row[c] += v;
      rows.push_back(std::move(row));
      rhs.push_back(std::move(r));
    };
    for (std::size_t k = 0; k < nk; ++k) {
      add({{alpha_at(k), -1}}, 0);
      for (std::size_t j = 0; j < n; ++j) {
        add({{w_at(k, j), 1}, {alpha_at(k), -a_list[k].upper(i, j)}}, 0);
        add({{w_at(k, j), -1}, {alpha_at(k), a_list[k].lower(i, j)}}, 0);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      add({{b_at(j), 1}}, b.upper(i, j));
      add({{b_at(j), -1}}, -b.lower(i, j));
      std::vector<std::pair<std::size_t, Rational>> sum{{b_at(j), 1}};
      for (std::size_t k = 0; k < nk; ++k) sum.push_back({w_at(k, j), -1});
      add(sum, 0);
      for (auto& term : sum) term.second = -term.second;
      add(sum, 0);
    }
    const RatMatrix matrix = RatMatrix::from_rows(rows, vars);
    const RatVector bound(rhs);
    lp::LpBuilder builder(vars);
    for (std::size_t r = 0; r < rows.size(); ++r) builder.add_row(rows[r], lp::RowSense::kLessEqual, rhs[r]);
    const auto out = lp::feasible(builder.build());
    Stratum s;
    if (const auto* point = std::get_if<lp::Feasible>(&out)) {
      s.x = point->x;
    } else {
      s.certificate = inconsistency_from_farkas(matrix, bound, std::get<lp::Infeasible>(out).farkas);
    }
    return s;
  });

  WeakSolution sol;
  std::vector<RatVector> alpha_diag(nk, RatVector(b.rows()));
  sol.a_choices.assign(nk, RatMatrix(b.rows(), n));
  sol.b_choice = RatMatrix(b.rows(), n);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (results[i].certificate) {
      ensure(proves_empty(*results[i].certificate), "weak solution certificate");
      return NoWeakSolution{i, *results[i].certificate};
    }
    const RatVector& x = *results[i].x;
    for (std::size_t k = 0; k < nk; ++k) {
      const Rational& alpha = x[alpha_at(k)];
      alpha_diag[k][i] = alpha;
      for (std::size_t j = 0; j < n; ++j) {
        sol.a_choices[k](i, j) = alpha.sign() > 0 ? x[w_at(k, j)] / alpha : a_list[k].lower(i, j);
      }
    }
    for (std::size_t j = 0; j < n; ++j) sol.b_choice(i, j) = x[b_at(j)];
  }
  for (auto& d : alpha_diag) sol.alphas.emplace_back(std::move(d), true);
  ensure(verify_weak_solution(a_list, b, sol), "weak solution");
  return sol;
}

EquivalenceViolation::EquivalenceViolation(EquivalenceReport report)
    : std::logic_error("interval condition and weak solution disagree"), report_(std::move(report)) {}

EquivalenceReport interval_equivalence_check(const std::vector<IntervalOperator>& a_list, const IntervalOperator& b,
                                             const SolveOptions& options) {
  EquivalenceReport report{interval_condition(a_list, b, options), weak_solution(a_list, b, options)};
  const bool holds = std::holds_alternative<IntervalHolds>(report.condition);
  const bool solved = std::holds_alternative<WeakSolution>(report.solution);
  if (holds != solved) throw EquivalenceViolation(std::move(report));
  return report;
}

}  // namespace farkas
