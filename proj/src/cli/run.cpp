#include "farkas/cli/run.hpp"

#include <chrono>
#include <sstream>

#include "farkas/cli/verify.hpp"
#include "farkas/lp/linear_program.hpp"

namespace farkas::cli {

namespace {

Json write_diagonals(const std::vector<Orthomorphism>& alphas) {
  Json out = Json::array();
  for (const auto& a : alphas) out.push_back(write(a.diag()));
  return out;
}

Json witness_json(const StratumWitness& w, bool with_block) {
  Json out{{"type", "stratum_witness"},
           {"coordinate", w.coordinate},
           {"x", write(w.x)},
           {"mask_b", write(w.mask_b)},
           {"mask_b_prime", write(w.mask_b_prime)}};
  if (with_block) out["target_block"] = w.target_block;
  return out;
}

Json inconsistent_json(std::size_t coordinate, const Inconsistent& c) {
  return Json{{"type", "inconsistent"},
              {"coordinate", coordinate},
              {"rows", write(c.rows)},
              {"rhs", write(c.rhs)},
              {"weights", write(c.weights)}};
}

Json sublinear_strata_json(const std::vector<SublinearDominance>& strata) {
  Json out = Json::array();
  for (const auto& s : strata) {
    Json mu = Json::array();
    for (const auto& m : s.mu) mu.push_back(write(m));
    out.push_back(Json{{"lambda", write(s.lambda)}, {"mu", std::move(mu)}});
  }
  return out;
}

struct Outcome {
  Verdict verdict;
  Json artifact;
};

Outcome run_operator(const ProblemFile& problem, const OperatorSystem& sys, const SolveOptions& options) {
  if (problem.kind == Kind::kInhomogeneous) {
    const auto out = inhomogeneous_consequence(sys, options);
    if (const auto* c = std::get_if<OrthoCertificate>(&out)) {
      return {Verdict::kDominance, Json{{"type", "ortho_certificate"}, {"alphas", write_diagonals(c->alphas)}}};
    }
    if (const auto* w = std::get_if<StratumWitness>(&out)) return {Verdict::kWitness, witness_json(*w, false)};
    const auto& inc = std::get<StratumInconsistent>(out);
    return {Verdict::kInconsistent, inconsistent_json(inc.coordinate, inc.certificate)};
  }
  const auto out = operator_consequence(sys, options);
  if (const auto* c = std::get_if<OrthoCertificate>(&out)) {
    return {Verdict::kDominance, Json{{"type", "ortho_certificate"}, {"alphas", write_diagonals(c->alphas)}}};
  }
  return {Verdict::kWitness, witness_json(std::get<StratumWitness>(out), false)};
}

Outcome run_matrix(const ProblemFile& problem, const MatrixPayload& p, const SolveOptions& options) {
  const auto out = matrix_consequence(p.a, p.b, p.u, p.v, problem.space.m, options);
  if (const auto* c = std::get_if<MatrixCertificate>(&out)) {
    Json grid = Json::array();
    for (const auto& row : c->grid) grid.push_back(write_diagonals(row));
    return {Verdict::kDominance, Json{{"type", "matrix_certificate"}, {"s", c->s}, {"t", c->t}, {"grid", grid}}};
  }
  if (const auto* w = std::get_if<StratumWitness>(&out)) return {Verdict::kWitness, witness_json(*w, true)};
  const auto& inc = std::get<StratumInconsistent>(out);
  return {Verdict::kInconsistent, inconsistent_json(inc.coordinate, inc.certificate)};
}

Outcome run_reconstruct(const ReconstructPayload& p) {
  const auto out = reconstruct(p.a, p.b);
  if (const auto* r = std::get_if<Proportional>(&out)) {
    return {Verdict::kDominance, Json{{"type", "proportional"}, {"alpha", write(r->alpha.diag())}, {"kappa", write(r->kappa)}}};
  }
  const auto& np = std::get<NotProportional>(out);
  return {Verdict::kWitness,
          Json{{"type", "not_proportional"}, {"coordinate", np.coordinate}, {"x", write(np.x)}, {"reason", np.reason}}};
}

Outcome run_factorize(const FactorizePayload& p) {
  if (p.positive) {
    const auto out = positive_factorize(p.a, p.b.row(0));
    if (const auto* f = std::get_if<PositiveFactor>(&out)) {
      return {Verdict::kDominance, Json{{"type", "positive_factor"}, {"x", write(f->x)}}};
    }
    return {Verdict::kWitness, Json{{"type", "factor_witness"}, {"x", write(std::get<Witness>(out).x)}}};
  }
  const auto out = factorize(p.a, p.b);
  if (const auto* f = std::get_if<Factor>(&out)) return {Verdict::kDominance, Json{{"type", "factor"}, {"X", write(f->x)}}};
  return {Verdict::kWitness, Json{{"type", "no_factor"}, {"x", write(std::get<NoFactor>(out).x)}}};
}

Outcome run_sublinear(const SublinearPayload& p, const SolveOptions& options) {
  const auto out = operator_sublinear_consequence(p.p_list, p.u_list, p.target, p.v, options);
  if (const auto* c = std::get_if<SublinearCertificate>(&out)) {
    return {Verdict::kDominance, Json{{"type", "sublinear_certificate"},
                                      {"alphas", write_diagonals(c->alphas)},
                                      {"strata", sublinear_strata_json(c->strata)}}};
  }
  if (const auto* w = std::get_if<StratumWitness>(&out)) return {Verdict::kWitness, witness_json(*w, false)};
  const auto& inc = std::get<StratumInconsistent>(out);
  return {Verdict::kInconsistent, inconsistent_json(inc.coordinate, inc.certificate)};
}

// A feasible point and a direction along which the objective falls without bound.
std::pair<RatVector, RatVector> unbounded_ray(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u,
                                              const PolyhedralSublinear& p) {
  const std::size_t n = p.dim();
  lp::LpBuilder builder(n + 1);
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    for (std::size_t j = 0; j < p_list[k].generators.rows(); ++j) {
      RatVector row(n + 1);
      for (std::size_t c = 0; c < n; ++c) row[c] = p_list[k].generators(j, c);
      builder.add_row(std::move(row), lp::RowSense::kLessEqual, u[k]);
    }
  }
  for (std::size_t j = 0; j < p.generators.rows(); ++j) {
    RatVector row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row[c] = p.generators(j, c);
    row[n] = -1;
    builder.add_row(std::move(row), lp::RowSense::kLessEqual, 0);
  }
  RatVector cost(n + 1);
  cost[n] = 1;
  builder.set_objective(std::move(cost), lp::ObjectiveSense::kMinimize);
  const auto out = lp::optimize(builder.build());
  const auto* ray = std::get_if<lp::Unbounded>(&out);
  if (ray == nullptr) throw std::logic_error("lagrange: primal reported -inf but the epigraph LP is bounded");
  return {ray->x.slice(0, n), ray->ray.slice(0, n)};
}

// Convex weights lambda, mu_k with sum lambda_j p_j + sum_k alpha_k sum_j mu_kj p_kj = 0,
// which exist exactly when alpha attains a finite dual value.
Json multiplier_weights(const std::vector<PolyhedralSublinear>& p_list, const PolyhedralSublinear& p,
                        const RatVector& alpha) {
  const std::size_t n = p.dim();
  std::vector<std::size_t> offset{0};
  offset.push_back(p.generators.rows());
  for (const auto& q : p_list) offset.push_back(offset.back() + q.generators.rows());
  const std::size_t vars = offset.back();
  lp::LpBuilder builder(vars);
  builder.nonnegative(0, vars);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector row(vars);
    for (std::size_t j = 0; j < p.generators.rows(); ++j) row[j] = p.generators(j, c);
    for (std::size_t k = 0; k < p_list.size(); ++k) {
      for (std::size_t j = 0; j < p_list[k].generators.rows(); ++j) row[offset[k + 1] + j] = alpha[k] * p_list[k].generators(j, c);
    }
    builder.add_row(std::move(row), lp::RowSense::kEqual, 0);
  }
  for (std::size_t block = 0; block + 1 < offset.size(); ++block) {
    RatVector row(vars);
    for (std::size_t j = offset[block]; j < offset[block + 1]; ++j) row[j] = 1;
    builder.add_row(std::move(row), lp::RowSense::kEqual, 1);
  }
  const auto out = lp::feasible(builder.build());
  const auto* point = std::get_if<lp::Feasible>(&out);
  if (point == nullptr) throw std::logic_error("lagrange: the reported multipliers do not attain the dual value");
  SublinearDominance d;
  d.lambda = point->x.slice(0, offset[1]);
  for (std::size_t k = 0; k < p_list.size(); ++k) d.mu.push_back(point->x.slice(offset[k + 1], offset[k + 2] - offset[k + 1]));
  return sublinear_strata_json({d})[0];
}

Outcome run_lagrange(const SublinearPayload& p) {
  LagrangeReport report;
  try {
    report = lagrange_check(p.p_list, p.u_list, p.target, p.stratum);
  } catch (const EmptyFeasible& e) {
    return {Verdict::kInconsistent, inconsistent_json(p.stratum, e.certificate())};
  }
  std::vector<PolyhedralSublinear> strata;
  RatVector u(p.p_list.size());
  for (std::size_t k = 0; k < p.p_list.size(); ++k) {
    strata.push_back(p.p_list[k].strata[p.stratum]);
    u[k] = p.u_list[k][p.stratum];
  }
  const PolyhedralSublinear& target = p.target.strata[p.stratum];

  Json artifact{{"type", "lagrange_report"},
                {"stratum", p.stratum},
                {"primal", report.primal.str()},
                {"dual", report.dual.str()},
                {"multipliers", write(report.multipliers)}};
  if (report.primal.is_minus_infinity()) {
    const auto [point, direction] = unbounded_ray(strata, u, target);
    artifact["ray"] = Json{{"point", write(point)}, {"direction", write(direction)}};
  } else {
    artifact["minimizer"] = write(*report.minimizer);
    artifact["bound"] = Json{{"weights", multiplier_weights(strata, target, report.multipliers)}};
  }
  return {Verdict::kDominance, artifact};
}

Outcome run_interval(const IntervalPayload& p, const SolveOptions& options) {
  const auto report = interval_equivalence_check(p.a_list, p.b, options);
  Json condition;
  if (const auto* f = std::get_if<IntervalFailsAt>(&report.condition)) {
    condition = Json{{"holds", false}, {"stratum", f->stratum}, {"orthant", f->orthant.str()}, {"x", write(f->x)}};
  } else {
    condition = Json{{"holds", true}};
  }
  Json solution;
  if (const auto* s = std::get_if<WeakSolution>(&report.solution)) {
    Json choices = Json::array();
    for (const auto& a : s->a_choices) choices.push_back(write(a));
    solution = Json{{"found", true},
                    {"alphas", write_diagonals(s->alphas)},
                    {"a_choices", std::move(choices)},
                    {"b_choice", write(s->b_choice)}};
  } else {
    const auto& none = std::get<NoWeakSolution>(report.solution);
    solution = inconsistent_json(none.stratum, none.certificate);
    solution.erase("type");
    solution["found"] = false;
  }
  const bool holds = std::holds_alternative<IntervalHolds>(report.condition);
  return {holds ? Verdict::kDominance : Verdict::kWitness,
          Json{{"type", "interval_report"}, {"condition", condition}, {"solution", solution}}};
}

Outcome run_complex(const ComplexProblem& p, const SolveOptions& options) {
  const auto out = complex_consequence(p, options);
  if (const auto* c = std::get_if<ComplexCertificate>(&out)) {
    Json cs = Json::array();
    Json ts = Json::array();
    for (std::size_t i = 0; i < c->c.size(); ++i) {
      Json row = Json::array();
      for (const auto& z : c->c[i]) row.push_back(write(z));
      cs.push_back(std::move(row));
      ts.push_back(write(c->t[i]));
    }
    return {Verdict::kDominance,
            Json{{"type", "complex_certificate"}, {"c", cs}, {"t", ts}, {"polygon_sides", c->polygon_sides}}};
  }
  if (const auto* w = std::get_if<StratumWitness>(&out)) return {Verdict::kWitness, witness_json(*w, false)};
  Json strata = Json::array();
  for (const auto& s : std::get<ComplexUndecided>(out).strata) {
    Json g{{"stratum", s.stratum}, {"sides", s.gap.sides}, {"witness_bound", write(s.gap.witness_bound)}};
    if (s.gap.certificate_bound) g["certificate_bound"] = write(*s.gap.certificate_bound);
    if (s.gap.lower_certificate_bound) g["lower_certificate_bound"] = write(*s.gap.lower_certificate_bound);
    strata.push_back(std::move(g));
  }
  return {Verdict::kUndecided, Json{{"type", "undecided"}, {"strata", strata}}};
}

Outcome dispatch(const ProblemFile& problem, const SolveOptions& options) {
  return std::visit(
      [&](const auto& p) -> Outcome {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, OperatorPayload>) {
          return run_operator(problem, p, options);
        } else if constexpr (std::is_same_v<T, MatrixPayload>) {
          return run_matrix(problem, p, options);
        } else if constexpr (std::is_same_v<T, ReconstructPayload>) {
          return run_reconstruct(p);
        } else if constexpr (std::is_same_v<T, FactorizePayload>) {
          return run_factorize(p);
        } else if constexpr (std::is_same_v<T, SublinearPayload>) {
          return problem.kind == Kind::kLagrange ? run_lagrange(p) : run_sublinear(p, options);
        } else if constexpr (std::is_same_v<T, IntervalPayload>) {
          return run_interval(p, options);
        } else {
          return run_complex(p, options);
        }
      },
      problem.payload);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kDominance: return "DOMINANCE";
    case Verdict::kWitness: return "WITNESS";
    case Verdict::kUndecided: return "UNDECIDED";
    case Verdict::kInconsistent: return "INCONSISTENT";
    case Verdict::kError: return "ERROR";
  }
  return "ERROR";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kDominance: return 0;
    case Verdict::kWitness: return 1;
    case Verdict::kUndecided: return 2;
    case Verdict::kInconsistent: return 3;
    case Verdict::kError: return 4;
  }
  return 4;
}

SolveOptions effective_options(const ProblemFile& problem, const Overrides& overrides) {
  SolveOptions o;
  o.jobs = overrides.jobs;
  if (problem.options.polygon_sides) o.polygon_sides = *problem.options.polygon_sides;
  if (problem.options.max_polygon_sides) o.max_polygon_sides = *problem.options.max_polygon_sides;
  if (problem.options.orthant_cap) o.orthant_cap = *problem.options.orthant_cap;
  if (overrides.polygon_sides) o.polygon_sides = *overrides.polygon_sides;
  if (overrides.orthant_cap) o.orthant_cap = *overrides.orthant_cap;
  o.max_polygon_sides = std::max(o.max_polygon_sides, o.polygon_sides);
  return o;
}

Report solve(const ProblemFile& problem, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const lp::Counters before = lp::counters();
  Outcome outcome = dispatch(problem, options);
  const lp::Counters after = lp::counters();

  Report report;
  report.kind = problem.kind;
  report.verdict = outcome.verdict;
  report.artifact = std::move(outcome.artifact);
  if (report.verdict != Verdict::kUndecided) {
    const VerifyResult check = verify_artifact(problem, report.artifact);
    if (!check.ok) throw std::logic_error("artifact failed independent verification: " + check.message);
    report.verified = true;
  }
  report.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.stats.lp_solves = after.solves - before.solves;
  report.stats.lp_pivots = after.pivots - before.pivots;
  return report;
}

Json report_json(const Report& report) {
  return Json{{"kind", kind_name(report.kind)},
              {"verdict", verdict_name(report.verdict)},
              {"verified", report.verified},
              {"artifact", report.artifact},
              {"stats",
               {{"millis", static_cast<std::int64_t>(report.stats.millis)},
                {"lp_solves", report.stats.lp_solves},
                {"lp_pivots", report.stats.lp_pivots}}}};
}

namespace {

std::string statement(Kind kind) {
  switch (kind) {
    case Kind::kHomogeneous:
      return "every x with A_k x <= 0 on a coordinate set b satisfies B x <= 0 on every b' <= b";
    case Kind::kAlternative:
      return "either some x has b A_k x <= 0 and b' B x > 0, or B = sum alpha_k A_k with alpha_k >= 0";
    case Kind::kInhomogeneous:
      return "every x with A_k x <= u_k on a coordinate set b satisfies B x <= v on every b' <= b";
    case Kind::kMatrix:
      return "A x <= u on a coordinate set b forces B x <= v there, blockwise";
    case Kind::kReconstruct:
      return "B = alpha A with a sign mask kappa marking alpha >= 0";
    case Kind::kFactorize:
      return "B factors through A (with a nonnegative factor when positive is set)";
    case Kind::kSublinear:
      return "every x with P_k(x) <= u_k satisfies P(x) >= v";
    case Kind::kLagrange:
      return "inf of P over {P_k <= u_k} equals its Lagrange dual at one coordinate";
    case Kind::kInterval:
      return "the interval condition holds exactly when a weak solution B = sum alpha_k A_k exists";
    case Kind::kComplex:
      return "every x with |A_k x| <= u_k satisfies |B x| <= v";
  }
  return "";
}

std::string text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + text(j[i]);
    return out + ")";
  }
  if (j.is_object() && j.contains("re")) return text(j["re"]) + (j["im"].get<std::string>().starts_with("-") ? " - " : " + ") +
                                                  [&] {
                                                    std::string im = j["im"].get<std::string>();
                                                    return im.starts_with("-") ? im.substr(1) : im;
                                                  }() + "i";
  return j.dump();
}

// Column i of a list of diagonals.
std::string column(const Json& diagonals, std::size_t i) {
  Json out = Json::array();
  for (const auto& d : diagonals) out.push_back(d[i]);
  return text(out);
}

void explain_operator(std::ostringstream& os, const ProblemFile& problem, const Json& a) {
  const std::size_t m = problem.space.m;
  const std::string type = a["type"].get<std::string>();
  if (type == "ortho_certificate") {
    const auto& sys = std::get<OperatorPayload>(problem.payload);
    for (std::size_t i = 0; i < m; ++i) {
      os << "  coordinate " << i << ": alpha = " << column(a["alphas"], i);
      if (sys.inhomogeneous()) {
        Rational residual = (*sys.v)[i];
        for (std::size_t k = 0; k < sys.a_list.size(); ++k) {
          residual -= read_rational(a["alphas"][k][i], "alpha") * (*sys.u_list)[k][i];
        }
        os << ", v - sum alpha u = " << residual.str();
      }
      os << "\n";
    }
  }
}

void explain_witness(std::ostringstream& os, const ProblemFile& problem, const Json& a) {
  const std::size_t c = a["coordinate"].get<std::size_t>();
  const RatVector x = read_vector(a["x"], "x");
  os << "  x = " << text(a["x"]) << ", b = b' = " << a["mask_b_prime"].get<std::string>() << "\n";
  if (const auto* sys = std::get_if<OperatorPayload>(&problem.payload)) {
    for (std::size_t k = 0; k < sys->a_list.size(); ++k) {
      os << "  (A_" << k << " x)_" << c << " = " << dot(sys->a_list[k].row(c), x).str();
      if (sys->inhomogeneous()) os << " <= " << (*sys->u_list)[k][c].str();
      os << "\n";
    }
    os << "  (B x)_" << c << " = " << dot(sys->b.row(c), x).str() << " > "
       << (sys->inhomogeneous() ? (*sys->v)[c].str() : std::string("0")) << "\n";
  } else if (const auto* p = std::get_if<MatrixPayload>(&problem.payload)) {
    const std::size_t q = a["target_block"].get<std::size_t>(), m = problem.space.m;
    os << "  block " << q << ": (B x)_" << c << " = " << dot(p->b.row(q * m + c), x).str() << " > "
       << p->v[q * m + c].str() << "\n";
  } else if (const auto* p = std::get_if<SublinearPayload>(&problem.payload)) {
    os << "  P(x)_" << c << " = " << p->target.strata[c](x).str() << " < " << p->v[c].str() << "\n";
  } else if (const auto* p = std::get_if<ComplexPayload>(&problem.payload)) {
    const ComplexRational z = p->b.stratum(c)(x);
    os << "  |B x|^2 at " << c << " = " << (z.re * z.re + z.im * z.im).str() << " > v^2 = " << (p->v[c] * p->v[c]).str()
       << "\n";
  }
}

}  // namespace

std::string explain(const ProblemFile& problem, const Report& report) {
  std::ostringstream os;
  os << kind_name(report.kind) << ": " << statement(report.kind) << "\n";
  os << "verdict: " << verdict_name(report.verdict) << (report.verified ? " (verified)" : "") << "\n";
  const Json& a = report.artifact;
  const std::string type = a.value("type", "");
  if (type == "ortho_certificate") {
    explain_operator(os, problem, a);
  } else if (type == "stratum_witness") {
    os << "  fails at coordinate " << a["coordinate"].get<std::size_t>() << "\n";
    explain_witness(os, problem, a);
  } else if (type == "inconsistent") {
    os << "  the hypotheses are empty at coordinate " << a["coordinate"].get<std::size_t>()
       << ": weights " << text(a["weights"]) << " combine the rows to 0 <= negative\n";
  } else if (type == "matrix_certificate") {
    os << "  X is a " << a["t"].get<std::size_t>() << " x " << a["s"].get<std::size_t>()
       << " grid of nonnegative diagonals with B = X A and X u <= v\n";
  } else if (type == "proportional") {
    os << "  alpha = " << text(a["alpha"]) << ", kappa = " << a["kappa"].get<std::string>() << "\n";
  } else if (type == "not_proportional") {
    os << "  row " << a["coordinate"].get<std::size_t>() << ": " << a["reason"].get<std::string>()
       << "; x = " << text(a["x"]) << "\n";
  } else if (type == "positive_factor" || type == "factor_witness" || type == "no_factor") {
    os << "  x = " << text(a["x"]) << "\n";
  } else if (type == "factor") {
    os << "  X = " << text(a["X"]) << "\n";
  } else if (type == "sublinear_certificate") {
    for (std::size_t i = 0; i < problem.space.m; ++i) os << "  coordinate " << i << ": alpha = " << column(a["alphas"], i) << "\n";
  } else if (type == "lagrange_report") {
    os << "  primal = " << a["primal"].get<std::string>() << ", dual = " << a["dual"].get<std::string>()
       << ", multipliers = " << text(a["multipliers"]) << "\n";
    if (a.contains("minimizer")) os << "  attained at x = " << text(a["minimizer"]) << "\n";
    if (a.contains("ray")) os << "  unbounded along " << text(a["ray"]["direction"]) << "\n";
  } else if (type == "interval_report") {
    const Json& c = a["condition"];
    if (c["holds"].get<bool>()) {
      os << "  condition holds; weak solution alphas per coordinate:\n";
      for (std::size_t i = 0; i < problem.space.m; ++i) {
        os << "    " << i << ": " << column(a["solution"]["alphas"], i) << "\n";
      }
    } else {
      os << "  condition fails at coordinate " << c["stratum"].get<std::size_t>() << " in orthant "
         << c["orthant"].get<std::string>() << " with x = " << text(c["x"]) << "\n";
      os << "  no weak solution: coordinate " << a["solution"]["coordinate"].get<std::size_t>()
         << " has an infeasibility certificate\n";
    }
  } else if (type == "complex_certificate") {
    for (std::size_t i = 0; i < problem.space.m; ++i) {
      os << "  coordinate " << i << ": c = " << text(a["c"][i]) << ", t = " << text(a["t"][i]) << "\n";
    }
    os << "  found with a " << a["polygon_sides"].get<int>() << "-gon\n";
  } else if (type == "undecided") {
    for (const auto& s : a["strata"]) {
      os << "  coordinate " << s["stratum"].get<std::size_t>() << " at " << s["sides"].get<int>()
         << " sides: sup |B x| >= " << s["witness_bound"].get<std::string>();
      if (s.contains("lower_certificate_bound")) {
        os << ", certificate cost in [" << s["lower_certificate_bound"].get<std::string>() << ", "
           << s["certificate_bound"].get<std::string>() << "]";
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace farkas::cli
