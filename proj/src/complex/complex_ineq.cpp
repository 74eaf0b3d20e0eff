#include "farkas/complex/complex_ineq.hpp"

#include <algorithm>
#include <stdexcept>

#include "farkas/support/parallel.hpp"

namespace farkas {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("complex engine produced an invalid artifact: ") + what);
}

bool nonnegative(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e.sign() >= 0; });
}

}  // namespace

std::vector<ComplexRational> ComplexOperator::operator()(const RatVector& x) const {
  const RatVector r = re * x;
  const RatVector s = im * x;
  std::vector<ComplexRational> out;
  for (std::size_t i = 0; i < r.dim(); ++i) out.push_back({r[i], s[i]});
  return out;
}

void ComplexOperator::validate() const {
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw std::invalid_argument("complex operator: real and imaginary parts differ in shape");
  }
}

void ComplexProblem::validate() const {
  b.validate();
  if (m() == 0 || n() == 0) throw std::invalid_argument("complex problem: B must be nonempty");
  if (u_list.size() != a_list.size()) throw std::invalid_argument("complex problem: one u per operator required");
  for (std::size_t k = 0; k < a_list.size(); ++k) {
    a_list[k].validate();
    if (a_list[k].rows() != m() || a_list[k].cols() != n()) {
      throw std::invalid_argument("complex problem: operators differ in shape");
    }
    if (u_list[k].dim() != m()) throw std::invalid_argument("complex problem: u has the wrong length");
    if (!nonnegative(u_list[k])) throw std::invalid_argument("complex problem: u must be >= 0");
  }
  if (v.dim() != m()) throw std::invalid_argument("complex problem: v has the wrong length");
  if (!nonnegative(v)) throw std::invalid_argument("complex problem: v must be >= 0");
}

bool verify_complex_certificate(const ComplexProblem& problem, const ComplexCertificate& cert) {
  const std::size_t m = problem.m();
  const std::size_t nk = problem.a_list.size();
  if (cert.c.size() != m || cert.t.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (cert.c[i].size() != nk || cert.t[i].dim() != nk) return false;
    ComplexFunctional sum{RatVector(problem.n()), RatVector(problem.n())};
    Rational bound;
    for (std::size_t k = 0; k < nk; ++k) {
      const Rational& t = cert.t[i][k];
      if (t.sign() < 0 || t * t < cert.c[i][k].norm_squared()) return false;
      sum = sum + scale(cert.c[i][k], problem.a_list[k].stratum(i));
      bound += t * problem.u_list[k][i];
    }
    if (!(sum == problem.b.stratum(i)) || bound > problem.v[i]) return false;
  }
  return true;
}

bool verify_complex_witness(const ComplexProblem& problem, const StratumWitness& w) {
  const std::size_t i = w.coordinate;
  if (i >= problem.m() || w.x.dim() != problem.n()) return false;
  for (std::size_t k = 0; k < problem.a_list.size(); ++k) {
    const Rational& u = problem.u_list[k][i];
    if (problem.a_list[k].stratum(i)(w.x).norm_squared() > u * u) return false;
  }
  return problem.b.stratum(i)(w.x).norm_squared() > problem.v[i] * problem.v[i];
}

std::variant<ComplexCertificate, StratumWitness, ComplexUndecided> complex_consequence(
    const ComplexProblem& problem, const SolveOptions& options) {
  problem.validate();
  const std::size_t m = problem.m();
  const ComplexOptions scalar_options{options.polygon_sides, options.max_polygon_sides};
  const auto results = parallel_map(m, options.jobs, [&](std::size_t i) {
    std::vector<ComplexFunctional> f_list;
    RatVector u(problem.a_list.size());
    for (std::size_t k = 0; k < problem.a_list.size(); ++k) {
      f_list.push_back(problem.a_list[k].stratum(i));
      u[k] = problem.u_list[k][i];
    }
    return complex_scalar_consequence(f_list, u, problem.b.stratum(i), problem.v[i], scalar_options);
  });

  for (std::size_t i = 0; i < m; ++i) {
    if (const auto* w = std::get_if<ComplexWitness>(&results[i])) {
      const Projection b = Projection::singleton(m, i);
      StratumWitness out{i, w->x, b, b, 0};
      ensure(verify_complex_witness(problem, out), "witness");
      return out;
    }
  }
  ComplexUndecided undecided;
  for (std::size_t i = 0; i < m; ++i) {
    if (const auto* g = std::get_if<ComplexGap>(&results[i])) undecided.strata.push_back({i, *g});
  }
  if (!undecided.strata.empty()) return undecided;

  ComplexCertificate cert;
  for (const auto& r : results) {
    const auto& d = std::get<ComplexDominance>(r);
    cert.c.push_back(d.c);
    cert.t.push_back(d.t);
    cert.polygon_sides = std::max(cert.polygon_sides, d.sides);
  }
  ensure(verify_complex_certificate(problem, cert), "certificate");
  return cert;
}

}  // namespace farkas
