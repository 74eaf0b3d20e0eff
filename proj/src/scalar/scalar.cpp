#include "farkas/scalar/scalar.hpp"

#include "farkas/exact/linalg.hpp"
#include "farkas/lp/linear_program.hpp"

namespace farkas {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("scalar engine produced an invalid artifact: ") + what);
}

bool nonnegative(const RatVector& v) {
  for (const auto& e : v) {
    if (e.sign() < 0) return false;
  }
  return true;
}

}  // namespace

void ScalarSystem::validate() const {
  if (f_rows.cols() != g.dim() && f_rows.rows() > 0) {
    throw std::invalid_argument("ScalarSystem: functionals and target differ in dimension");
  }
  if (u.has_value() != v.has_value()) throw std::invalid_argument("ScalarSystem: u and v must be given together");
  if (u && u->dim() != f_rows.rows()) throw std::invalid_argument("ScalarSystem: u needs one entry per functional");
}

bool proves_empty(const Inconsistent& c) {
  if (c.weights.dim() != c.rows.rows() || c.rhs.dim() != c.rows.rows()) return false;
  if (!nonnegative(c.weights)) return false;
  for (std::size_t j = 0; j < c.rows.cols(); ++j) {
    Rational s;
    for (std::size_t r = 0; r < c.rows.rows(); ++r) s += c.weights[r] * c.rows(r, j);
    if (!s.is_zero()) return false;
  }
  return dot(c.weights, c.rhs).sign() < 0;
}

Inconsistent inconsistency_from_farkas(const RatMatrix& rows, const RatVector& rhs, const RatVector& farkas) {
  // The LP convention puts nonpositive weights on <= rows.
  Inconsistent out{rows, rhs, -farkas};
  ensure(proves_empty(out), "inconsistency certificate");
  return out;
}

std::variant<ScaleDominance, Witness> single_consequence(const RatVector& f, const RatVector& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("single_consequence: dimension mismatch");
  if (g.is_zero()) return ScaleDominance{0};
  if (f.is_zero()) return Witness{g};

  std::size_t pivot = 0;
  while (f[pivot].is_zero()) ++pivot;
  const Rational lambda = g[pivot] / f[pivot];
  if (g == lambda * f) {
    if (lambda.sign() >= 0) return ScaleDominance{lambda};
    return Witness{-f};
  }
  // Not parallel: the component of g orthogonal to f.
  Witness w{g - (dot(f, g) / dot(f, f)) * f};
  ensure(dot(f, w.x).sign() <= 0 && dot(g, w.x).sign() > 0, "orthogonal witness");
  return w;
}

std::variant<Dominance, Witness> homogeneous_consequence(const ScalarSystem& sys) {
  sys.validate();
  const RatMatrix rows = sys.count() == 0 ? RatMatrix(0, sys.dim()) : sys.f_rows;
  const auto out = lp::strict_homogeneous_feasible(rows, sys.g);
  if (const auto* f = std::get_if<lp::StrictFeasible>(&out)) return Witness{f->x};
  return Dominance{std::get<lp::StrictInfeasible>(out).multipliers};
}

std::variant<Branch1, Branch2> scalar_alternative(const ScalarSystem& sys) {
  auto out = homogeneous_consequence(sys);
  if (auto* w = std::get_if<Witness>(&out)) return Branch1{std::move(w->x)};
  return Branch2{std::move(std::get<Dominance>(out).alpha)};
}

std::variant<Factor, NoFactor> factorize(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("factorize: operators have different domains");
  for (const auto& v : kernel_basis(a)) {
    if (!(b * v).is_zero()) return NoFactor{v};
  }
  const RatMatrix at = a.transpose();
  RatMatrix x(b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    const auto row = solve_exact(at, b.row(r));
    ensure(row.has_value(), "kernel inclusion without a factor");
    x.set_row(r, *row);
  }
  ensure(x * a == b, "factor identity");
  return Factor{std::move(x)};
}

HypothesisFailed::HypothesisFailed(std::size_t index, RatVector farkas)
    : std::runtime_error("A(X) - W+ != W: A x <= -e_" + std::to_string(index) + " has no solution"),
      index_(index),
      farkas_(std::move(farkas)) {}

std::variant<PositiveFactor, Witness> positive_factorize(const RatMatrix& a, const RatVector& b) {
  if (a.cols() != b.dim()) throw std::invalid_argument("positive_factorize: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    lp::LpBuilder builder(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) builder.add_row(a.row(r), lp::RowSense::kLessEqual, r == i ? -1 : 0);
    const auto out = lp::feasible(builder.build());
    if (const auto* inf = std::get_if<lp::Infeasible>(&out)) throw HypothesisFailed(i, inf->farkas);
  }
  const auto out = lp::strict_homogeneous_feasible(a, b);
  if (const auto* f = std::get_if<lp::StrictFeasible>(&out)) return Witness{f->x};
  return PositiveFactor{std::get<lp::StrictInfeasible>(out).multipliers};
}

std::variant<Dominance, Witness, Inconsistent> inhomogeneous_scalar(const ScalarSystem& sys) {
  sys.validate();
  if (!sys.inhomogeneous()) throw std::invalid_argument("inhomogeneous_scalar: u and v are required");
  const RatVector& u = *sys.u;
  const Rational& v = *sys.v;

  lp::LpBuilder builder(sys.dim());
  for (std::size_t k = 0; k < sys.count(); ++k) builder.add_row(sys.f_rows.row(k), lp::RowSense::kLessEqual, u[k]);
  builder.set_objective(sys.g, lp::ObjectiveSense::kMaximize);
  const lp::LinearProgram program = builder.build();

  const auto out = lp::optimize(program);
  if (const auto* inf = std::get_if<lp::Infeasible>(&out)) {
    return inconsistency_from_farkas(program.a, program.b, inf->farkas);
  }
  if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
    if (opt->value <= v) {
      // Duals of a max over <= rows are >= 0, reproduce g and sum to the optimum.
      Dominance d{opt->duals};
      ensure(nonnegative(d.alpha) && dot(d.alpha, u) <= v, "inhomogeneous dominance");
      return d;
    }
    return Witness{opt->x};
  }
  const auto& unb = std::get<lp::Unbounded>(out);
  const Rational base = dot(sys.g, unb.x);
  const Rational gain = dot(sys.g, unb.ray);
  Rational step = 1;
  if (base <= v) step += (v - base) / gain;
  Witness w{unb.x + step * unb.ray};
  ensure(dot(sys.g, w.x) > v && leq(program.a * w.x, u), "unbounded witness");
  return w;
}

}  // namespace farkas
