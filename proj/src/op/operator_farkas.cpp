#include "farkas/op/operator_farkas.hpp"

#include <stdexcept>

#include "farkas/support/parallel.hpp"

namespace farkas {

namespace {

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("operator engine produced an invalid artifact: ") + what);
}

std::vector<Orthomorphism> assemble(std::size_t count, std::size_t m, const std::vector<RatVector>& per_stratum) {
  std::vector<Orthomorphism> out;
  for (std::size_t k = 0; k < count; ++k) {
    RatVector diag(m);
    for (std::size_t i = 0; i < m; ++i) diag[i] = per_stratum[i][k];
    out.emplace_back(std::move(diag), true);
  }
  return out;
}

StratumWitness singleton_witness(std::size_t m, std::size_t i, RatVector x, std::size_t block = 0) {
  const Projection b = Projection::singleton(m, i);
  return StratumWitness{i, std::move(x), b, b, block};
}

bool positive_diag(const Orthomorphism& a, std::size_t m) { return a.size() == m && a.is_positive(); }

}  // namespace

void OperatorSystem::validate() const {
  if (m() == 0 || n() == 0) throw std::invalid_argument("operator system: B must be nonempty");
  for (const auto& a : a_list) {
    if (a.rows() != m() || a.cols() != n()) throw std::invalid_argument("operator system: operators differ in shape");
  }
  if (u_list.has_value() != v.has_value()) throw std::invalid_argument("operator system: u and v must be given together");
  if (u_list) {
    if (u_list->size() != a_list.size()) throw std::invalid_argument("operator system: one u per operator required");
    for (const auto& u : *u_list) {
      if (u.dim() != m()) throw std::invalid_argument("operator system: u has the wrong length");
    }
    if (v->dim() != m()) throw std::invalid_argument("operator system: v has the wrong length");
  }
}

ScalarSystem OperatorSystem::stratum(std::size_t i) const {
  ScalarSystem s;
  s.f_rows = RatMatrix(a_list.size(), n());
  for (std::size_t k = 0; k < a_list.size(); ++k) s.f_rows.set_row(k, a_list[k].row(i));
  s.g = b.row(i);
  if (u_list) {
    s.u = RatVector(a_list.size());
    for (std::size_t k = 0; k < a_list.size(); ++k) (*s.u)[k] = (*u_list)[k][i];
    s.v = (*v)[i];
  }
  return s;
}

bool verify_certificate(const OperatorSystem& sys, const OrthoCertificate& cert) {
  if (cert.alphas.size() != sys.a_list.size()) return false;
  RatMatrix sum(sys.m(), sys.n());
  RatVector bound(sys.m());
  for (std::size_t k = 0; k < cert.alphas.size(); ++k) {
    if (!positive_diag(cert.alphas[k], sys.m())) return false;
    sum += cert.alphas[k].apply(sys.a_list[k]);
    if (sys.u_list) bound += cert.alphas[k].apply((*sys.u_list)[k]);
  }
  if (sum != sys.b) return false;
  return !sys.v || leq(bound, *sys.v);
}

bool verify_witness(const OperatorSystem& sys, const StratumWitness& w) {
  const std::size_t m = sys.m();
  if (w.x.dim() != sys.n() || w.mask_b.size() != m || w.mask_b_prime.size() != m) return false;
  if (w.coordinate >= m || !w.mask_b_prime[w.coordinate] || !w.mask_b_prime.leq(w.mask_b)) return false;
  for (std::size_t k = 0; k < sys.a_list.size(); ++k) {
    const RatVector lhs = masked_apply(w.mask_b, sys.a_list[k], w.x);
    const RatVector rhs = sys.u_list ? w.mask_b.apply((*sys.u_list)[k]) : RatVector(m);
    if (!leq(lhs, rhs)) return false;
  }
  const Rational target = masked_apply(w.mask_b_prime, sys.b, w.x)[w.coordinate];
  return sys.v ? target > (*sys.v)[w.coordinate] : target.sign() > 0;
}

std::variant<OrthoCertificate, StratumWitness> operator_consequence(const OperatorSystem& sys,
                                                                    const SolveOptions& options) {
  sys.validate();
  if (sys.inhomogeneous()) throw std::invalid_argument("operator_consequence: homogeneous system expected");
  const auto results =
      parallel_map(sys.m(), options.jobs, [&](std::size_t i) { return homogeneous_consequence(sys.stratum(i)); });

  std::vector<RatVector> alphas;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (const auto* w = std::get_if<Witness>(&results[i])) {
      StratumWitness out = singleton_witness(sys.m(), i, w->x);
      ensure(verify_witness(sys, out), "homogeneous witness");
      return out;
    }
    alphas.push_back(std::get<Dominance>(results[i]).alpha);
  }
  OrthoCertificate cert{assemble(sys.a_list.size(), sys.m(), alphas)};
  ensure(verify_certificate(sys, cert), "homogeneous certificate");
  return cert;
}

std::variant<StratumWitness, OrthoCertificate> operator_alternative(const OperatorSystem& sys,
                                                                    const SolveOptions& options) {
  auto out = operator_consequence(sys, options);
  if (auto* w = std::get_if<StratumWitness>(&out)) return std::move(*w);
  return std::move(std::get<OrthoCertificate>(out));
}

std::variant<Proportional, NotProportional> reconstruct(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("reconstruct: shapes differ");
  const std::size_t m = a.rows();
  RatVector alpha(m);
  std::vector<bool> kappa(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    const RatVector ai = a.row(i);
    const RatVector bi = b.row(i);
    if (ai.is_zero()) {
      if (!bi.is_zero()) return NotProportional{i, bi, "row of A is zero but row of B is not"};
      continue;  // alpha_i = 0, inside kappa
    }
    std::size_t p = 0;
    while (ai[p].is_zero()) ++p;
    const Rational lambda = bi[p] / ai[p];
    if (bi != lambda * ai) {
      RatVector x = bi - (dot(ai, bi) / dot(ai, ai)) * ai;
      ensure(dot(ai, x).is_zero() && dot(bi, x).sign() > 0, "kernel witness");
      return NotProportional{i, std::move(x), "row of B is not a multiple of row of A"};
    }
    alpha[i] = lambda;
    kappa[i] = lambda.sign() >= 0;
  }
  Proportional out{Orthomorphism(alpha), Projection(kappa)};
  ensure(out.alpha.apply(a) == b, "proportionality");
  return out;
}

bool reconstruct_conditions_hold(const RatMatrix& a, const RatMatrix& b, const Projection& kappa) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || kappa.size() != a.rows()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const RatVector f = kappa[i] ? a.row(i) : -a.row(i);
    if (!std::holds_alternative<ScaleDominance>(single_consequence(f, b.row(i)))) return false;
  }
  return true;
}

std::variant<OrthoCertificate, StratumWitness, StratumInconsistent> inhomogeneous_consequence(
    const OperatorSystem& sys, const SolveOptions& options) {
  sys.validate();
  if (!sys.inhomogeneous()) throw std::invalid_argument("inhomogeneous_consequence: u and v are required");
  const auto results =
      parallel_map(sys.m(), options.jobs, [&](std::size_t i) { return inhomogeneous_scalar(sys.stratum(i)); });

  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (const auto* c = std::get_if<Inconsistent>(&results[i])) return StratumInconsistent{i, *c};
  }
  std::vector<RatVector> alphas;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (const auto* w = std::get_if<Witness>(&results[i])) {
      StratumWitness out = singleton_witness(sys.m(), i, w->x);
      ensure(verify_witness(sys, out), "inhomogeneous witness");
      return out;
    }
    alphas.push_back(std::get<Dominance>(results[i]).alpha);
  }
  OrthoCertificate cert{assemble(sys.a_list.size(), sys.m(), alphas)};
  ensure(verify_certificate(sys, cert), "inhomogeneous certificate");
  return cert;
}

bool verify_matrix_certificate(const RatMatrix& a, const RatMatrix& b, const RatVector& u, const RatVector& v,
                               std::size_t m, const MatrixCertificate& cert) {
  if (m == 0 || a.rows() != cert.s * m || b.rows() != cert.t * m || a.cols() != b.cols()) return false;
  if (u.dim() != a.rows() || v.dim() != b.rows() || cert.grid.size() != cert.t) return false;
  for (const auto& row : cert.grid) {
    if (row.size() != cert.s) return false;
    for (const auto& entry : row) {
      if (!positive_diag(entry, m)) return false;
    }
  }
  for (std::size_t q = 0; q < cert.t; ++q) {
    for (std::size_t i = 0; i < m; ++i) {
      RatVector lhs(a.cols());
      Rational bound;
      for (std::size_t p = 0; p < cert.s; ++p) {
        const Rational& x = cert.grid[q][p][i];
        lhs += x * a.row(p * m + i);
        bound += x * u[p * m + i];
      }
      if (lhs != b.row(q * m + i) || bound > v[q * m + i]) return false;
    }
  }
  return true;
}

std::variant<MatrixCertificate, StratumWitness, StratumInconsistent> matrix_consequence(
    const RatMatrix& a, const RatMatrix& b, const RatVector& u, const RatVector& v, std::size_t m,
    const SolveOptions& options) {
  if (m == 0 || a.rows() % m != 0 || b.rows() % m != 0 || b.rows() == 0) {
    throw std::invalid_argument("matrix_consequence: block rows must be a positive multiple of m");
  }
  if (a.rows() > 0 && a.cols() != b.cols()) throw std::invalid_argument("matrix_consequence: domains differ");
  if (u.dim() != a.rows() || v.dim() != b.rows()) throw std::invalid_argument("matrix_consequence: u or v has the wrong length");
  const std::size_t s = a.rows() / m;
  const std::size_t t = b.rows() / m;
  const std::size_t n = b.cols();

  // One scalar problem per (stratum i, target block q), indexed i * t + q.
  const auto results = parallel_map(m * t, options.jobs, [&](std::size_t job) {
    const std::size_t i = job / t;
    const std::size_t q = job % t;
    ScalarSystem sys;
    sys.f_rows = RatMatrix(s, n);
    sys.u = RatVector(s);
    for (std::size_t p = 0; p < s; ++p) {
      sys.f_rows.set_row(p, a.row(p * m + i));
      (*sys.u)[p] = u[p * m + i];
    }
    sys.g = b.row(q * m + i);
    sys.v = v[q * m + i];
    return inhomogeneous_scalar(sys);
  });

  for (std::size_t job = 0; job < results.size(); ++job) {
    if (const auto* c = std::get_if<Inconsistent>(&results[job])) return StratumInconsistent{job / t, *c};
  }
  for (std::size_t job = 0; job < results.size(); ++job) {
    if (const auto* w = std::get_if<Witness>(&results[job])) return singleton_witness(m, job / t, w->x, job % t);
  }

  MatrixCertificate cert{s, t, {}};
  cert.grid.assign(t, std::vector<Orthomorphism>(s, Orthomorphism::zero(m)));
  for (std::size_t q = 0; q < t; ++q) {
    for (std::size_t p = 0; p < s; ++p) {
      RatVector diag(m);
      for (std::size_t i = 0; i < m; ++i) diag[i] = std::get<Dominance>(results[i * t + q]).alpha[p];
      cert.grid[q][p] = Orthomorphism(std::move(diag), true);
    }
  }
  ensure(verify_matrix_certificate(a, b, u, v, m, cert), "matrix certificate");
  return cert;
}

RatVector SublinearOperator::operator()(const RatVector& x) const {
  RatVector out(strata.size());
  for (std::size_t i = 0; i < strata.size(); ++i) out[i] = strata[i](x);
  return out;
}

namespace {

void validate_sublinear(const std::vector<SublinearOperator>& p_list, const std::vector<RatVector>& u_list,
                        const SublinearOperator& p) {
  if (p.m() == 0) throw std::invalid_argument("sublinear operator needs at least one coordinate");
  if (u_list.size() != p_list.size()) throw std::invalid_argument("sublinear system: one u per operator required");
  for (std::size_t k = 0; k < p_list.size(); ++k) {
    if (p_list[k].m() != p.m() || u_list[k].dim() != p.m()) {
      throw std::invalid_argument("sublinear system: operators differ in codomain");
    }
  }
}

// Scalar data at coordinate i.
std::vector<PolyhedralSublinear> stratum_list(const std::vector<SublinearOperator>& p_list, std::size_t i) {
  std::vector<PolyhedralSublinear> out;
  for (const auto& pk : p_list) out.push_back(pk.strata[i]);
  return out;
}

RatVector stratum_u(const std::vector<RatVector>& u_list, std::size_t i) {
  RatVector out(u_list.size());
  for (std::size_t k = 0; k < u_list.size(); ++k) out[k] = u_list[k][i];
  return out;
}

}  // namespace

std::variant<SublinearCertificate, StratumWitness, StratumInconsistent> operator_sublinear_consequence(
    const std::vector<SublinearOperator>& p_list, const std::vector<RatVector>& u_list, const SublinearOperator& p,
    const RatVector& v, const SolveOptions& options) {
  validate_sublinear(p_list, u_list, p);
  const std::size_t m = p.m();
  if (v.dim() != m) throw std::invalid_argument("sublinear system: v has the wrong length");
  const auto results = parallel_map(m, options.jobs, [&](std::size_t i) {
    return sublinear_consequence(stratum_list(p_list, i), stratum_u(u_list, i), p.strata[i], v[i]);
  });

  for (std::size_t i = 0; i < m; ++i) {
    if (const auto* c = std::get_if<Inconsistent>(&results[i])) return StratumInconsistent{i, *c};
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (const auto* w = std::get_if<Witness>(&results[i])) return singleton_witness(m, i, w->x);
  }
  SublinearCertificate cert;
  std::vector<RatVector> alphas;
  for (std::size_t i = 0; i < m; ++i) {
    cert.strata.push_back(std::get<SublinearDominance>(results[i]));
    alphas.push_back(cert.strata.back().alpha);
  }
  cert.alphas = assemble(p_list.size(), m, alphas);
  return cert;
}

LagrangeReport lagrange_check(const std::vector<SublinearOperator>& p_list, const std::vector<RatVector>& u_list,
                              const SublinearOperator& p, std::size_t stratum) {
  validate_sublinear(p_list, u_list, p);
  if (stratum >= p.m()) throw std::out_of_range("lagrange_check: stratum out of range");
  return lagrange_scalar(stratum_list(p_list, stratum), stratum_u(u_list, stratum), p.strata[stratum]);
}

}  // namespace farkas
