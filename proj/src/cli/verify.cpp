#include "farkas/cli/verify.hpp"

#include <sstream>

namespace farkas::cli {

namespace {

// Thrown inside a check to report the first violated relation.
struct Violation {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Violation{message};
}

std::string at(std::size_t i) { return "[" + std::to_string(i) + "]"; }
std::string at(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<bool> read_mask(const Json& j, const std::string& path, std::size_t m) {
  const std::string text = read_string(j, path);
  if (text.size() != m) throw InputError(path + ": expected a mask of length " + std::to_string(m));
  std::vector<bool> out;
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError(path + ": masks use the characters 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

std::vector<RatVector> read_list(const Json& j, const std::string& path, std::size_t count, std::size_t dim) {
  if (!j.is_array() || j.size() != count) {
    throw InputError(path + ": expected " + std::to_string(count) + " entries");
  }
  std::vector<RatVector> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(read_vector(j[k], join(path, k), dim));
  return out;
}

void require_nonnegative(const RatVector& v, const std::string& name) {
  for (std::size_t i = 0; i < v.dim(); ++i) require(v[i].sign() >= 0, name + at(i) + " >= 0");
}

void require_convex(const RatVector& w, const std::string& name) {
  require_nonnegative(w, name);
  Rational sum;
  for (const auto& e : w) sum += e;
  require(sum == 1, "sum of " + name + " = 1");
}

Rational max_form(const RatMatrix& gens, const RatVector& x) {
  Rational best;
  for (std::size_t j = 0; j < gens.rows(); ++j) {
    const Rational value = dot(gens.row(j), x);
    if (j == 0 || value > best) best = value;
  }
  return best;
}

// weights >= 0, weights^T rows = 0, weights^T rhs < 0, after checking that
// rows and rhs are the expected system.
void check_inconsistent(const Json& a, const RatMatrix& rows, const RatVector& rhs) {
  const RatMatrix given_rows = read_matrix(field(a, "rows", "artifact"), "artifact.rows", rows.rows(), rows.cols());
  const RatVector given_rhs = read_vector(field(a, "rhs", "artifact"), "artifact.rhs", rhs.dim());
  const RatVector w = read_vector(field(a, "weights", "artifact"), "artifact.weights", rows.rows());
  require(given_rows == rows && given_rhs == rhs, "rows and rhs equal the constraints of the reported coordinate");
  require_nonnegative(w, "weights");
  RatVector combo(rows.cols());
  Rational bound;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    combo += w[r] * rows.row(r);
    bound += w[r] * rhs[r];
  }
  require(combo.is_zero(), "weights^T rows = 0");
  require(bound.sign() < 0, "weights^T rhs < 0");
}

std::size_t read_coordinate(const Json& a, std::size_t m) {
  const std::size_t i = read_index(field(a, "coordinate", "artifact"), "artifact.coordinate");
  if (i >= m) throw InputError("artifact.coordinate: out of range");
  return i;
}

std::string type_of(const Json& a) { return read_string(field(a, "type", "artifact"), "artifact.type"); }

[[noreturn]] void wrong_type(const std::string& type, Kind kind) {
  throw InputError("artifact.type: \"" + type + "\" does not apply to kind " + kind_name(kind));
}

void verify_operator(const ProblemFile& problem, const OperatorSystem& sys, const Json& a) {
  const std::size_t m = problem.space.m, n = problem.space.n, nk = sys.a_list.size();
  const bool inhom = problem.kind == Kind::kInhomogeneous;
  const std::string type = type_of(a);
  if (type == "ortho_certificate") {
    const auto alphas = read_list(field(a, "alphas", "artifact"), "artifact.alphas", nk, m);
    for (std::size_t k = 0; k < nk; ++k) require_nonnegative(alphas[k], "alpha_" + std::to_string(k));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational sum;
        for (std::size_t k = 0; k < nk; ++k) sum += alphas[k][i] * sys.a_list[k](i, j);
        require(sum == sys.b(i, j), "sum_k alpha_k A_k = B at " + at(i, j));
      }
      if (inhom) {
        Rational sum;
        for (std::size_t k = 0; k < nk; ++k) sum += alphas[k][i] * (*sys.u_list)[k][i];
        require(sum <= (*sys.v)[i], "sum_k alpha_k u_k <= v at " + at(i));
      }
    }
  } else if (type == "stratum_witness") {
    const std::size_t c = read_coordinate(a, m);
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    const auto b = read_mask(field(a, "mask_b", "artifact"), "artifact.mask_b", m);
    const auto bp = read_mask(field(a, "mask_b_prime", "artifact"), "artifact.mask_b_prime", m);
    for (std::size_t i = 0; i < m; ++i) require(!bp[i] || b[i], "mask_b_prime <= mask_b");
    require(bp[c], "the coordinate lies in mask_b_prime");
    for (std::size_t k = 0; k < nk; ++k) {
      const RatVector ax = sys.a_list[k] * x;
      for (std::size_t i = 0; i < m; ++i) {
        if (!b[i]) continue;
        const Rational bound = inhom ? (*sys.u_list)[k][i] : Rational(0);
        require(ax[i] <= bound, std::string("b A_") + std::to_string(k) + " x <= " + (inhom ? "b u" : "0") + " at " + at(i));
      }
    }
    const Rational bx = dot(sys.b.row(c), x);
    require(inhom ? bx > (*sys.v)[c] : bx.sign() > 0, std::string("b' B x > ") + (inhom ? "b' v" : "0") + " at " + at(c));
  } else if (type == "inconsistent" && inhom) {
    const std::size_t c = read_coordinate(a, m);
    RatMatrix rows(nk, n);
    RatVector rhs(nk);
    for (std::size_t k = 0; k < nk; ++k) {
      rows.set_row(k, sys.a_list[k].row(c));
      rhs[k] = (*sys.u_list)[k][c];
    }
    check_inconsistent(a, rows, rhs);
  } else {
    wrong_type(type, problem.kind);
  }
}

void verify_matrix(const ProblemFile& problem, const MatrixPayload& p, const Json& a) {
  const std::size_t m = problem.space.m, n = problem.space.n;
  const std::size_t s = p.a.rows() / m, t = p.b.rows() / m;
  const std::string type = type_of(a);
  if (type == "matrix_certificate") {
    require(read_index(field(a, "s", "artifact"), "artifact.s") == s, "s equals the number of A blocks");
    require(read_index(field(a, "t", "artifact"), "artifact.t") == t, "t equals the number of B blocks");
    const Json& grid = field(a, "grid", "artifact");
    if (!grid.is_array() || grid.size() != t) throw InputError("artifact.grid: expected t rows");
    for (std::size_t q = 0; q < t; ++q) {
      const auto row = read_list(grid[q], join("artifact.grid", q), s, m);
      for (std::size_t pp = 0; pp < s; ++pp) require_nonnegative(row[pp], "X" + at(q, pp));
      for (std::size_t i = 0; i < m; ++i) {
        RatVector combo(n);
        Rational bound;
        for (std::size_t pp = 0; pp < s; ++pp) {
          combo += row[pp][i] * p.a.row(pp * m + i);
          bound += row[pp][i] * p.u[pp * m + i];
        }
        require(combo == p.b.row(q * m + i), "B = X A in block " + std::to_string(q) + " at coordinate " + std::to_string(i));
        require(bound <= p.v[q * m + i], "X u <= v in block " + std::to_string(q) + " at coordinate " + std::to_string(i));
      }
    }
  } else if (type == "stratum_witness") {
    const std::size_t c = read_coordinate(a, m);
    const std::size_t q = read_index(field(a, "target_block", "artifact"), "artifact.target_block");
    if (q >= t) throw InputError("artifact.target_block: out of range");
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    const auto b = read_mask(field(a, "mask_b", "artifact"), "artifact.mask_b", m);
    const auto bp = read_mask(field(a, "mask_b_prime", "artifact"), "artifact.mask_b_prime", m);
    for (std::size_t i = 0; i < m; ++i) require(!bp[i] || b[i], "mask_b_prime <= mask_b");
    require(bp[c], "the coordinate lies in mask_b_prime");
    const RatVector ax = p.a * x;
    for (std::size_t pp = 0; pp < s; ++pp) {
      for (std::size_t i = 0; i < m; ++i) {
        if (b[i]) require(ax[pp * m + i] <= p.u[pp * m + i], "b A x <= b u in block " + std::to_string(pp) + " at " + at(i));
      }
    }
    require(dot(p.b.row(q * m + c), x) > p.v[q * m + c], "b' B x > b' v in block " + std::to_string(q) + " at " + at(c));
  } else if (type == "inconsistent") {
    const std::size_t c = read_coordinate(a, m);
    RatMatrix rows(s, n);
    RatVector rhs(s);
    for (std::size_t pp = 0; pp < s; ++pp) {
      rows.set_row(pp, p.a.row(pp * m + c));
      rhs[pp] = p.u[pp * m + c];
    }
    check_inconsistent(a, rows, rhs);
  } else {
    wrong_type(type, problem.kind);
  }
}

void verify_reconstruct(const ProblemFile& problem, const ReconstructPayload& p, const Json& a) {
  const std::size_t m = problem.space.m, n = problem.space.n;
  const std::string type = type_of(a);
  if (type == "proportional") {
    const RatVector alpha = read_vector(field(a, "alpha", "artifact"), "artifact.alpha", m);
    const auto kappa = read_mask(field(a, "kappa", "artifact"), "artifact.kappa", m);
    for (std::size_t i = 0; i < m; ++i) {
      require(alpha[i] * p.a.row(i) == p.b.row(i), "B = alpha A at row " + std::to_string(i));
      require(kappa[i] == (alpha[i].sign() >= 0), "kappa marks alpha >= 0 at " + at(i));
    }
  } else if (type == "not_proportional") {
    const std::size_t c = read_coordinate(a, m);
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    require(dot(p.a.row(c), x).is_zero(), "A x = 0 at " + at(c));
    require(!dot(p.b.row(c), x).is_zero(), "B x != 0 at " + at(c));
  } else {
    wrong_type(type, problem.kind);
  }
}

void verify_factorize(const ProblemFile& problem, const FactorizePayload& p, const Json& a) {
  const std::size_t n = problem.space.n, r = p.a.rows();
  const std::string type = type_of(a);
  if (type == "factor" && !p.positive) {
    const RatMatrix x = read_matrix(field(a, "X", "artifact"), "artifact.X", p.b.rows(), r);
    for (std::size_t i = 0; i < p.b.rows(); ++i) {
      RatVector row(n);
      for (std::size_t k = 0; k < r; ++k) row += x(i, k) * p.a.row(k);
      require(row == p.b.row(i), "X A = B at row " + std::to_string(i));
    }
  } else if (type == "no_factor" && !p.positive) {
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    require((p.a * x).is_zero(), "A x = 0");
    require(!(p.b * x).is_zero(), "B x != 0");
  } else if (type == "positive_factor" && p.positive) {
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", r);
    require_nonnegative(x, "x");
    RatVector row(n);
    for (std::size_t k = 0; k < r; ++k) row += x[k] * p.a.row(k);
    require(row == p.b.row(0), "x^T A = B");
  } else if (type == "factor_witness" && p.positive) {
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    const RatVector ax = p.a * x;
    for (std::size_t k = 0; k < r; ++k) require(ax[k].sign() <= 0, "A x <= 0 at " + at(k));
    require(dot(p.b.row(0), x).sign() > 0, "B x > 0");
  } else {
    wrong_type(type, problem.kind);
  }
}

// Constraint rows of coordinate i: every generator of every P_k, bounded by u_k[i].
std::pair<RatMatrix, RatVector> sublinear_rows(const SublinearPayload& p, std::size_t i, std::size_t n) {
  std::vector<RatVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t k = 0; k < p.p_list.size(); ++k) {
    const RatMatrix& g = p.p_list[k].strata[i].generators;
    for (std::size_t j = 0; j < g.rows(); ++j) {
      rows.push_back(g.row(j));
      rhs.push_back(p.u_list[k][i]);
    }
  }
  return {RatMatrix::from_rows(rows, n), RatVector(rhs)};
}

// lambda and mu convex with sum_j lambda_j p_j + sum_k alpha_k sum_j mu_kj p_kj = 0.
void check_weights(const SublinearPayload& p, std::size_t i, const RatVector& alpha, const Json& w,
                   const std::string& path, std::size_t n) {
  const RatMatrix& target = p.target.strata[i].generators;
  const RatVector lambda = read_vector(field(w, "lambda", path), join(path, "lambda"), target.rows());
  require_convex(lambda, "lambda at " + at(i));
  const Json& mu_list = field(w, "mu", path);
  if (!mu_list.is_array() || mu_list.size() != p.p_list.size()) throw InputError(join(path, "mu") + ": one entry per operator");
  RatVector combo(n);
  for (std::size_t j = 0; j < target.rows(); ++j) combo += lambda[j] * target.row(j);
  for (std::size_t k = 0; k < p.p_list.size(); ++k) {
    const RatMatrix& g = p.p_list[k].strata[i].generators;
    const RatVector mu = read_vector(mu_list[k], join(join(path, "mu"), k), g.rows());
    require_convex(mu, "mu_" + std::to_string(k) + " at " + at(i));
    for (std::size_t j = 0; j < g.rows(); ++j) combo += (alpha[k] * mu[j]) * g.row(j);
  }
  require(combo.is_zero(), "sum lambda_j p_j + sum_k alpha_k sum_j mu_kj p_kj = 0 at " + at(i));
}

void verify_sublinear(const ProblemFile& problem, const SublinearPayload& p, const Json& a) {
  const std::size_t m = problem.space.m, n = problem.space.n, nk = p.p_list.size();
  const std::string type = type_of(a);
  if (type == "sublinear_certificate") {
    const auto alphas = read_list(field(a, "alphas", "artifact"), "artifact.alphas", nk, m);
    for (std::size_t k = 0; k < nk; ++k) require_nonnegative(alphas[k], "alpha_" + std::to_string(k));
    const Json& strata = field(a, "strata", "artifact");
    if (!strata.is_array() || strata.size() != m) throw InputError("artifact.strata: one entry per coordinate");
    for (std::size_t i = 0; i < m; ++i) {
      RatVector alpha(nk);
      Rational bound;
      for (std::size_t k = 0; k < nk; ++k) {
        alpha[k] = alphas[k][i];
        bound += alpha[k] * p.u_list[k][i];
      }
      check_weights(p, i, alpha, strata[i], join("artifact.strata", i), n);
      require(bound <= -p.v[i], "sum_k alpha_k u_k <= -v at " + at(i));
    }
  } else if (type == "stratum_witness") {
    const std::size_t c = read_coordinate(a, m);
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    const auto b = read_mask(field(a, "mask_b", "artifact"), "artifact.mask_b", m);
    const auto bp = read_mask(field(a, "mask_b_prime", "artifact"), "artifact.mask_b_prime", m);
    for (std::size_t i = 0; i < m; ++i) require(!bp[i] || b[i], "mask_b_prime <= mask_b");
    require(bp[c], "the coordinate lies in mask_b_prime");
    for (std::size_t i = 0; i < m; ++i) {
      if (!b[i]) continue;
      for (std::size_t k = 0; k < nk; ++k) {
        require(max_form(p.p_list[k].strata[i].generators, x) <= p.u_list[k][i],
                "P_" + std::to_string(k) + "(x) <= u_" + std::to_string(k) + " at " + at(i));
      }
    }
    require(max_form(p.target.strata[c].generators, x) < p.v[c], "P(x) < v at " + at(c));
  } else if (type == "inconsistent") {
    const std::size_t c = read_coordinate(a, m);
    const auto [rows, rhs] = sublinear_rows(p, c, n);
    check_inconsistent(a, rows, rhs);
  } else {
    wrong_type(type, problem.kind);
  }
}

void verify_lagrange(const ProblemFile& problem, const SublinearPayload& p, const Json& a) {
  const std::size_t n = problem.space.n, nk = p.p_list.size(), i = p.stratum;
  const std::string type = type_of(a);
  if (type == "inconsistent") {
    require(read_coordinate(a, problem.space.m) == i, "the coordinate is the requested stratum");
    const auto [rows, rhs] = sublinear_rows(p, i, n);
    check_inconsistent(a, rows, rhs);
    return;
  }
  if (type != "lagrange_report") wrong_type(type, problem.kind);
  require(read_index(field(a, "stratum", "artifact"), "artifact.stratum") == i, "the report is for the requested stratum");
  const std::string primal = read_string(field(a, "primal", "artifact"), "artifact.primal");
  const std::string dual = read_string(field(a, "dual", "artifact"), "artifact.dual");
  const RatVector multipliers = read_vector(field(a, "multipliers", "artifact"), "artifact.multipliers", nk);
  require_nonnegative(multipliers, "multipliers");
  auto feasible = [&](const RatVector& x, const std::string& what) {
    for (std::size_t k = 0; k < nk; ++k) {
      require(max_form(p.p_list[k].strata[i].generators, x) <= p.u_list[k][i],
              "P_" + std::to_string(k) + "(" + what + ") <= u_" + std::to_string(k));
    }
  };
  const RatMatrix& target = p.target.strata[i].generators;
  if (primal == "-inf") {
    require(dual == "-inf", "dual value = primal value");
    const Json& ray = field(a, "ray", "artifact");
    const RatVector point = read_vector(field(ray, "point", "artifact.ray"), "artifact.ray.point", n);
    const RatVector dir = read_vector(field(ray, "direction", "artifact.ray"), "artifact.ray.direction", n);
    feasible(point, "point");
    for (std::size_t k = 0; k < nk; ++k) {
      require(max_form(p.p_list[k].strata[i].generators, dir) <= 0, "P_" + std::to_string(k) + "(direction) <= 0");
    }
    require(max_form(target, dir).sign() < 0, "P(direction) < 0");
    return;
  }
  const Rational value = read_rational(field(a, "primal", "artifact"), "artifact.primal");
  require(dual != "-inf" && read_rational(field(a, "dual", "artifact"), "artifact.dual") == value,
          "dual value = primal value");
  const RatVector x = read_vector(field(a, "minimizer", "artifact"), "artifact.minimizer", n);
  feasible(x, "minimizer");
  require(max_form(target, x) == value, "P(minimizer) = primal value");
  // P + sum alpha_k P_k >= 0 with sum alpha_k u_k = -primal makes the
  // multipliers attain the primal value.
  const Json& bound = field(a, "bound", "artifact");
  check_weights(p, i, multipliers, field(bound, "weights", "artifact.bound"), "artifact.bound.weights", n);
  Rational sum;
  for (std::size_t k = 0; k < nk; ++k) sum += multipliers[k] * p.u_list[k][i];
  require(sum == -value, "sum_k alpha_k u_k = -primal value");
}

// upper x_+ - lower x_-, computed entry by entry.
Rational p_entry(const IntervalOperator& t, std::size_t i, const RatVector& x) {
  Rational out;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j].sign() > 0) out += t.upper(i, j) * x[j];
    if (x[j].sign() < 0) out += t.lower(i, j) * x[j];
  }
  return out;
}

bool inside(const IntervalOperator& t, const RatMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j) < t.lower(i, j) || x(i, j) > t.upper(i, j)) return false;
    }
  }
  return true;
}

// Rows of the weak-solution system at coordinate i over (alpha_k, w_k, b), in
// the documented order.
std::pair<RatMatrix, RatVector> weak_solution_rows(const IntervalPayload& p, std::size_t i, std::size_t n) {
  const std::size_t nk = p.a_list.size();
  const std::size_t vars = nk + nk * n + n;
  std::vector<RatVector> rows;
  std::vector<Rational> rhs;
  auto row = [&]() { return RatVector(vars); };
  for (std::size_t k = 0; k < nk; ++k) {
    RatVector r = row();
    r[k] = -1;
    rows.push_back(r);
    rhs.push_back(0);
    for (std::size_t j = 0; j < n; ++j) {
      RatVector hi = row(), lo = row();
      hi[nk + k * n + j] = 1;
      hi[k] = -p.a_list[k].upper(i, j);
      lo[nk + k * n + j] = -1;
      lo[k] = p.a_list[k].lower(i, j);
      rows.push_back(hi);
      rhs.push_back(0);
      rows.push_back(lo);
      rhs.push_back(0);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    RatVector hi = row(), lo = row(), sum = row();
    hi[nk + nk * n + j] = 1;
    lo[nk + nk * n + j] = -1;
    sum[nk + nk * n + j] = 1;
    for (std::size_t k = 0; k < nk; ++k) sum[nk + k * n + j] = -1;
    rows.push_back(hi);
    rhs.push_back(p.b.upper(i, j));
    rows.push_back(lo);
    rhs.push_back(-p.b.lower(i, j));
    rows.push_back(sum);
    rhs.push_back(0);
    rows.push_back(-sum);
    rhs.push_back(0);
  }
  return {RatMatrix::from_rows(rows, vars), RatVector(rhs)};
}

void verify_interval(const ProblemFile& problem, const IntervalPayload& p, const Json& a) {
  const std::size_t m = problem.space.m, n = problem.space.n, nk = p.a_list.size();
  const std::string type = type_of(a);
  if (type != "interval_report") wrong_type(type, problem.kind);
  const Json& cond = field(a, "condition", "artifact");
  const Json& sol = field(a, "solution", "artifact");
  const bool holds = read_bool(field(cond, "holds", "artifact.condition"), "artifact.condition.holds");
  const bool found = read_bool(field(sol, "found", "artifact.solution"), "artifact.solution.found");
  require(holds == found, "the condition holds exactly when a weak solution exists");

  if (!holds) {
    const std::size_t i = read_index(field(cond, "stratum", "artifact.condition"), "artifact.condition.stratum");
    if (i >= m) throw InputError("artifact.condition.stratum: out of range");
    const std::string orthant = read_string(field(cond, "orthant", "artifact.condition"), "artifact.condition.orthant");
    if (orthant.size() != n) throw InputError("artifact.condition.orthant: expected one sign per coordinate");
    const RatVector x = read_vector(field(cond, "x", "artifact.condition"), "artifact.condition.x", n);
    for (std::size_t j = 0; j < n; ++j) {
      if (orthant[j] != '+' && orthant[j] != '-') throw InputError("artifact.condition.orthant: signs are + or -");
      require(orthant[j] == '+' ? x[j].sign() >= 0 : x[j].sign() <= 0, "x lies in the orthant at " + at(j));
    }
    for (std::size_t k = 0; k < nk; ++k) {
      require(p_entry(p.a_list[k], i, -x).sign() <= 0, "P_A" + std::to_string(k) + "(-x) <= 0 at " + at(i));
    }
    require(p_entry(p.b, i, x).sign() < 0, "P_B(x) < 0 at " + at(i));

    const std::size_t c = read_index(field(sol, "coordinate", "artifact.solution"), "artifact.solution.coordinate");
    if (c >= m) throw InputError("artifact.solution.coordinate: out of range");
    const auto [rows, rhs] = weak_solution_rows(p, c, n);
    check_inconsistent(sol, rows, rhs);
    return;
  }
  const auto alphas = read_list(field(sol, "alphas", "artifact.solution"), "artifact.solution.alphas", nk, m);
  const Json& choices = field(sol, "a_choices", "artifact.solution");
  if (!choices.is_array() || choices.size() != nk) throw InputError("artifact.solution.a_choices: one per operator");
  const RatMatrix b = read_matrix(field(sol, "b_choice", "artifact.solution"), "artifact.solution.b_choice", m, n);
  require(inside(p.b, b), "B_choice lies in [B_lower, B_upper]");
  RatMatrix sum(m, n);
  for (std::size_t k = 0; k < nk; ++k) {
    require_nonnegative(alphas[k], "alpha_" + std::to_string(k));
    const RatMatrix ak = read_matrix(choices[k], join("artifact.solution.a_choices", k), m, n);
    require(inside(p.a_list[k], ak), "A_choice " + std::to_string(k) + " lies in its interval");
    for (std::size_t i = 0; i < m; ++i) sum.set_row(i, sum.row(i) + alphas[k][i] * ak.row(i));
  }
  require(sum == b, "B_choice = sum_k alpha_k A_choice_k");
}

void verify_complex(const ProblemFile& problem, const ComplexProblem& p, const Json& a) {
  const std::size_t m = problem.space.m, n = problem.space.n, nk = p.a_list.size();
  const std::string type = type_of(a);
  auto modulus2 = [](const RatMatrix& re, const RatMatrix& im, std::size_t i, const RatVector& x) {
    const Rational r = dot(re.row(i), x), s = dot(im.row(i), x);
    return r * r + s * s;
  };
  if (type == "complex_certificate") {
    const Json& cs = field(a, "c", "artifact");
    const auto ts = read_list(field(a, "t", "artifact"), "artifact.t", m, nk);
    if (!cs.is_array() || cs.size() != m) throw InputError("artifact.c: one row per coordinate");
    for (std::size_t i = 0; i < m; ++i) {
      if (!cs[i].is_array() || cs[i].size() != nk) throw InputError(join("artifact.c", i) + ": one entry per operator");
      RatVector re(n), im(n);
      Rational bound;
      for (std::size_t k = 0; k < nk; ++k) {
        const ComplexRational c = read_complex(cs[i][k], join(join("artifact.c", i), k));
        const Rational& t = ts[i][k];
        require(t.sign() >= 0 && t * t >= c.re * c.re + c.im * c.im, "|c_k| <= t_k at " + at(i, k));
        re += c.re * p.a_list[k].re.row(i) - c.im * p.a_list[k].im.row(i);
        im += c.re * p.a_list[k].im.row(i) + c.im * p.a_list[k].re.row(i);
        bound += t * p.u_list[k][i];
      }
      require(re == p.b.re.row(i) && im == p.b.im.row(i), "B = sum_k c_k A_k at row " + std::to_string(i));
      require(bound <= p.v[i], "sum_k t_k u_k <= v at " + at(i));
    }
  } else if (type == "stratum_witness") {
    const std::size_t c = read_coordinate(a, m);
    const RatVector x = read_vector(field(a, "x", "artifact"), "artifact.x", n);
    const auto b = read_mask(field(a, "mask_b", "artifact"), "artifact.mask_b", m);
    const auto bp = read_mask(field(a, "mask_b_prime", "artifact"), "artifact.mask_b_prime", m);
    for (std::size_t i = 0; i < m; ++i) require(!bp[i] || b[i], "mask_b_prime <= mask_b");
    require(bp[c], "the coordinate lies in mask_b_prime");
    for (std::size_t i = 0; i < m; ++i) {
      if (!b[i]) continue;
      for (std::size_t k = 0; k < nk; ++k) {
        const Rational& u = p.u_list[k][i];
        require(modulus2(p.a_list[k].re, p.a_list[k].im, i, x) <= u * u,
                "|A_" + std::to_string(k) + " x|^2 <= u^2 at " + at(i));
      }
    }
    require(modulus2(p.b.re, p.b.im, c, x) > p.v[c] * p.v[c], "|B x|^2 > v^2 at " + at(c));
  } else if (type == "undecided") {
    throw InputError("artifact.type: an undecided report carries bounds, not a checkable artifact");
  } else {
    wrong_type(type, problem.kind);
  }
}

}  // namespace

VerifyResult verify_artifact(const ProblemFile& problem, const Json& input) {
  const Json& artifact = input.is_object() && input.contains("verdict") && input.contains("artifact") ? input["artifact"] : input;
  try {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, OperatorPayload>) {
            verify_operator(problem, p, artifact);
          } else if constexpr (std::is_same_v<T, MatrixPayload>) {
            verify_matrix(problem, p, artifact);
          } else if constexpr (std::is_same_v<T, ReconstructPayload>) {
            verify_reconstruct(problem, p, artifact);
          } else if constexpr (std::is_same_v<T, FactorizePayload>) {
            verify_factorize(problem, p, artifact);
          } else if constexpr (std::is_same_v<T, SublinearPayload>) {
            if (problem.kind == Kind::kLagrange) {
              verify_lagrange(problem, p, artifact);
            } else {
              verify_sublinear(problem, p, artifact);
            }
          } else if constexpr (std::is_same_v<T, IntervalPayload>) {
            verify_interval(problem, p, artifact);
          } else {
            verify_complex(problem, p, artifact);
          }
        },
        problem.payload);
  } catch (const Violation& v) {
    return {false, "violated: " + v.message};
  }
  return {true, "all relations hold"};
}

}  // namespace farkas::cli
