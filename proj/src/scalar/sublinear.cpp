#include <stdexcept>

#include "farkas/lp/linear_program.hpp"
#include "farkas/scalar/scalar.hpp"

namespace farkas {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("sublinear engine produced an invalid artifact: ") + what);
}

void validate_data(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u, const PolyhedralSublinear& p) {
  p.validate();
  if (u.dim() != p_list.size()) throw std::invalid_argument("sublinear data: u needs one entry per constraint");
  for (const auto& pk : p_list) {
    pk.validate();
    if (pk.dim() != p.dim()) throw std::invalid_argument("sublinear data: functionals differ in dimension");
  }
}

// Rows p_kj and right-hand sides u_k of the system {p_k <= u_k}.
struct ConstraintRows {
  RatMatrix rows;
  RatVector rhs;
  std::vector<std::size_t> owner;  // k for each row
};

ConstraintRows constraint_rows(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u, std::size_t n) {
  std::vector<RatVector> rows;
  std::vector<Rational> rhs;
  ConstraintRows out;
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    for (std::size_t j = 0; j < p_list[k].generators.rows(); ++j) {
      rows.push_back(p_list[k].generators.row(j));
      rhs.push_back(u[k]);
      out.owner.push_back(k);
    }
  }
  out.rows = RatMatrix::from_rows(rows, n);
  out.rhs = RatVector(rhs);
  return out;
}

std::optional<Inconsistent> check_consistent(const ConstraintRows& c) {
  lp::LpBuilder builder(c.rows.cols());
  for (std::size_t r = 0; r < c.rows.rows(); ++r) builder.add_row(c.rows.row(r), lp::RowSense::kLessEqual, c.rhs[r]);
  const auto out = lp::feasible(builder.build());
  if (const auto* inf = std::get_if<lp::Infeasible>(&out)) return inconsistency_from_farkas(c.rows, c.rhs, inf->farkas);
  return std::nullopt;
}

// min t over (x, t): <p_j, x> - t <= 0 for p's generators, then the constraint rows.
lp::LinearProgram epigraph_lp(const PolyhedralSublinear& p, const ConstraintRows& c) {
  const std::size_t n = p.dim();
  lp::LpBuilder builder(n + 1);
  for (std::size_t j = 0; j < p.generators.rows(); ++j) {
    RatVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = p.generators(j, i);
    row[n] = -1;
    builder.add_row(std::move(row), lp::RowSense::kLessEqual, 0);
  }
  for (std::size_t r = 0; r < c.rows.rows(); ++r) {
    RatVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = c.rows(r, i);
    builder.add_row(std::move(row), lp::RowSense::kLessEqual, c.rhs[r]);
  }
  builder.set_objective(RatVector::unit(n + 1, n), lp::ObjectiveSense::kMinimize);
  return builder.build();
}

bool satisfies_constraints(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u, const RatVector& x) {
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    if (p_list[k](x) > u[k]) return false;
  }
  return true;
}

RatVector uniform_weights(std::size_t count) {
  RatVector w(count);
  for (std::size_t j = 0; j < count; ++j) w[j] = Rational(1, static_cast<long>(count));
  return w;
}

}  // namespace

Rational PolyhedralSublinear::operator()(const RatVector& x) const {
  Rational best = dot(generators.row(0), x);
  for (std::size_t j = 1; j < generators.rows(); ++j) best = max(best, dot(generators.row(j), x));
  return best;
}

void PolyhedralSublinear::validate() const {
  if (generators.rows() == 0) throw std::invalid_argument("polyhedral sublinear functional needs a generator");
}

std::variant<SublinearDominance, Witness, Inconsistent> sublinear_consequence(
    const std::vector<PolyhedralSublinear>& p_list, const RatVector& u, const PolyhedralSublinear& p,
    const Rational& v) {
  validate_data(p_list, u, p);
  const std::size_t n = p.dim();
  const ConstraintRows c = constraint_rows(p_list, u, n);
  if (auto bad = check_consistent(c)) return *bad;

  // Variables: lambda over p's generators, then nu over all constraint rows.
  const std::size_t nl = p.generators.rows();
  const std::size_t nv = c.rows.rows();
  lp::LpBuilder synth(nl + nv);
  synth.nonnegative(0, nl + nv);
  {
    RatVector row(nl + nv);
    for (std::size_t j = 0; j < nl; ++j) row[j] = 1;
    synth.add_row(std::move(row), lp::RowSense::kEqual, 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(nl + nv);
    for (std::size_t j = 0; j < nl; ++j) row[j] = p.generators(j, i);
    for (std::size_t r = 0; r < nv; ++r) row[nl + r] = c.rows(r, i);
    synth.add_row(std::move(row), lp::RowSense::kEqual, 0);
  }
  {
    RatVector row(nl + nv);
    for (std::size_t r = 0; r < nv; ++r) row[nl + r] = c.rhs[r];
    synth.add_row(std::move(row), lp::RowSense::kLessEqual, -v);
  }
  const auto found = lp::feasible(synth.build());
  if (const auto* f = std::get_if<lp::Feasible>(&found)) {
    SublinearDominance d;
    d.alpha = RatVector(p_list.size());
    d.lambda = f->x.slice(0, nl);
    for (std::size_t r = 0; r < nv; ++r) d.alpha[c.owner[r]] += f->x[nl + r];
    std::size_t r = 0;
    for (std::size_t k = 0; k < p_list.size(); ++k) {
      const std::size_t count = p_list[k].generators.rows();
      if (d.alpha[k].is_zero()) {
        d.mu.push_back(uniform_weights(count));
      } else {
        d.mu.push_back(f->x.slice(nl + r, count) * (Rational(1) / d.alpha[k]));
      }
      r += count;
    }
    ensure(dot(d.alpha, u) <= -v, "sublinear dominance bound");
    return d;
  }

  // No multipliers: the minimum of p over the constraint set is below v.
  const lp::LinearProgram epi = epigraph_lp(p, c);
  const auto out = lp::optimize(epi);
  Witness w;
  if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
    w.x = opt->x.slice(0, n);
  } else if (const auto* unb = std::get_if<lp::Unbounded>(&out)) {
    const Rational t0 = unb->x[n];
    const Rational dt = unb->ray[n];  // < 0
    Rational step = 1;
    if (t0 >= v) step += (t0 - v) / -dt;
    w.x = (unb->x + step * unb->ray).slice(0, n);
  } else {
    throw std::logic_error("epigraph LP infeasible over a consistent system");
  }
  ensure(p(w.x) < v && satisfies_constraints(p_list, u, w.x), "sublinear witness");
  return w;
}

EmptyFeasible::EmptyFeasible(Inconsistent certificate)
    : std::runtime_error("the constraint set of the Lagrange problem is empty"), certificate_(std::move(certificate)) {}

LagrangeReport lagrange_scalar(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u,
                               const PolyhedralSublinear& p) {
  validate_data(p_list, u, p);
  const std::size_t n = p.dim();
  const std::size_t nk = p_list.size();
  const ConstraintRows c = constraint_rows(p_list, u, n);
  if (auto bad = check_consistent(c)) throw EmptyFeasible(std::move(*bad));

  LagrangeReport report;
  report.multipliers = RatVector(nk);
  const auto out = lp::optimize(epigraph_lp(p, c));
  if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
    report.primal.value = opt->value;
    report.minimizer = opt->x.slice(0, n);
    // Minimization duals are <= 0 on <= rows; the constraint rows follow p's generators.
    const std::size_t offset = p.generators.rows();
    for (std::size_t r = 0; r < c.rows.rows(); ++r) report.multipliers[c.owner[r]] -= opt->duals[offset + r];
  } else if (std::holds_alternative<lp::Unbounded>(out)) {
    report.primal = ExtendedRational::minus_infinity();
  } else {
    throw std::logic_error("epigraph LP infeasible over a consistent system");
  }

  // Dual value: p + sum alpha_k p_k is sublinear, so its infimum is 0 when it
  // is nonnegative on the unit box and -infinity otherwise.
  lp::LpBuilder box(n + 1 + nk);
  auto epi_row = [&](const RatVector& gen, std::size_t t_index) {
    RatVector row(n + 1 + nk);
    for (std::size_t i = 0; i < n; ++i) row[i] = gen[i];
    row[t_index] = -1;
    box.add_row(std::move(row), lp::RowSense::kLessEqual, 0);
  };
  for (std::size_t j = 0; j < p.generators.rows(); ++j) epi_row(p.generators.row(j), n);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t j = 0; j < p_list[k].generators.rows(); ++j) epi_row(p_list[k].generators.row(j), n + 1 + k);
  }
  for (std::size_t i = 0; i < n; ++i) {
    box.add_sparse({{i, 1}}, lp::RowSense::kLessEqual, 1);
    box.add_sparse({{i, 1}}, lp::RowSense::kGreaterEqual, -1);
  }
  RatVector objective(n + 1 + nk);
  objective[n] = 1;
  for (std::size_t k = 0; k < nk; ++k) objective[n + 1 + k] = report.multipliers[k];
  box.set_objective(std::move(objective), lp::ObjectiveSense::kMinimize);
  const auto inf = lp::optimize(box.build());
  const auto* box_opt = std::get_if<lp::Optimal>(&inf);
  if (!box_opt) throw std::logic_error("Lagrangian box problem must have an optimum");
  if (box_opt->value.sign() < 0) {
    report.dual = ExtendedRational::minus_infinity();
  } else {
    report.dual.value = -dot(report.multipliers, u);
  }
  return report;
}

}  // namespace farkas
