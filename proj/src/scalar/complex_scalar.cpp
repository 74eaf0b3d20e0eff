#include "farkas/scalar/complex_scalar.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "farkas/complex/polygon.hpp"
#include "farkas/lp/linear_program.hpp"

namespace farkas {

namespace {

// Direction count for the witness search; the constraint polygon keeps the full size.
constexpr int kWitnessDirections = 64;

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("complex engine produced an invalid artifact: ") + what);
}

bool dominance_holds(const std::vector<ComplexFunctional>& f_list, const RatVector& u, const ComplexFunctional& g,
                     const Rational& v, const ComplexDominance& d) {
  if (d.c.size() != f_list.size() || d.t.dim() != f_list.size()) return false;
  ComplexFunctional sum{RatVector(g.dim()), RatVector(g.dim())};
  Rational bound;
  for (std::size_t k = 0; k < f_list.size(); ++k) {
    if (d.t[k].sign() < 0 || d.t[k] * d.t[k] < d.c[k].norm_squared()) return false;
    sum = sum + scale(d.c[k], f_list[k]);
    bound += d.t[k] * u[k];
  }
  return sum == g && bound <= v;
}

bool witness_holds(const std::vector<ComplexFunctional>& f_list, const RatVector& u, const ComplexFunctional& g,
                   const Rational& v, const RatVector& x) {
  for (std::size_t k = 0; k < f_list.size(); ++k) {
    if (f_list[k](x).norm_squared() > u[k] * u[k]) return false;
  }
  return g(x).norm_squared() > v * v;
}

// Column generation over a fixed column pool: solve the LP on an active
// subset, then add every pool column the duals price as improving. The pool
// is finite and each round adds a column, so this ends at the optimum over
// the whole pool; with Bland's rule the full LP would walk the polygon one
// vertex per pivot.
struct PoolLp {
  const std::vector<RatVector>& pool;  // column vectors, all of equal length
  const RatVector& cost;               // one entry per pool column
  RatVector rhs;

  lp::LpOutcome solve(const std::vector<std::size_t>& active) const {
    lp::LpBuilder builder(active.size());
    builder.nonnegative(0, active.size());
    for (std::size_t r = 0; r < rhs.dim(); ++r) {
      RatVector row(active.size());
      for (std::size_t c = 0; c < active.size(); ++c) row[c] = pool[active[c]][r];
      builder.add_row(std::move(row), lp::RowSense::kEqual, rhs[r]);
    }
    RatVector c(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) c[i] = cost[active[i]];
    builder.set_objective(std::move(c), lp::ObjectiveSense::kMinimize);
    return lp::optimize(builder.build());
  }
};

// Per block of `width` pool columns, the index maximizing score(column) - offset(column), if that exceeds 0.
template <typename Score>
bool add_violated(std::set<std::size_t>& active, std::size_t blocks, std::size_t width, Score score) {
  bool added = false;
  for (std::size_t k = 0; k < blocks; ++k) {
    std::optional<std::size_t> best;
    Rational best_value;
    for (std::size_t j = 0; j < width; ++j) {
      const Rational value = score(k * width + j);
      if (value.sign() > 0 && (!best || value > best_value)) {
        best = k * width + j;
        best_value = value;
      }
    }
    if (best && active.insert(*best).second) added = true;
  }
  return added;
}

// min sum_k u_k sum_j mu_kj over mu >= 0 with g = sum_k (sum_j mu_kj q_j) f_k.
// Every c_k = sum_j mu_kj q_j then satisfies |c_k| <= sum_j mu_kj exactly.
std::optional<ComplexDominance> certify(const std::vector<ComplexFunctional>& f_list, const RatVector& u,
                                        const ComplexFunctional& g, const Rational& v, const ModulusPolygon& poly,
                                        ComplexGap& gap) {
  const std::size_t nk = f_list.size();
  const std::size_t m = poly.points.size();
  const std::size_t n = g.dim();
  std::vector<RatVector> pool;
  RatVector cost(nk * m);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      const ComplexFunctional col = scale(poly.points[j], f_list[k]);
      RatVector entries(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        entries[2 * i] = col.re[i];
        entries[2 * i + 1] = col.im[i];
      }
      pool.push_back(std::move(entries));
      cost[k * m + j] = u[k];
    }
  }
  PoolLp master{pool, cost, RatVector(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    master.rhs[2 * i] = g.re[i];
    master.rhs[2 * i + 1] = g.im[i];
  }

  // Points 0, m/4 and their negations positively span the plane, so the
  // starting columns already reach every complex combination of the f_k.
  std::set<std::size_t> active;
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t j : {std::size_t{0}, m / 4, m / 2, m / 2 + m / 4}) active.insert(k * m + j);
  }
  std::vector<std::size_t> columns;
  lp::Optimal opt;
  while (true) {
    columns.assign(active.begin(), active.end());
    const auto out = master.solve(columns);
    if (std::holds_alternative<lp::Infeasible>(out)) return std::nullopt;  // g is not in the span
    const auto* found = std::get_if<lp::Optimal>(&out);
    ensure(found != nullptr, "certificate LP cannot be unbounded");
    opt = *found;
    const bool added = add_violated(active, nk, m, [&](std::size_t c) { return dot(opt.duals, pool[c]) - cost[c]; });
    if (!added) break;
  }

  ComplexDominance d;
  d.sides = poly.sides;
  d.t = RatVector(nk);
  d.c.assign(nk, ComplexRational{});
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Rational& mu = opt.x[c];
    if (mu.is_zero()) continue;
    const std::size_t k = columns[c] / m;
    const ComplexRational& q = poly.points[columns[c] % m];
    d.c[k] = d.c[k] + ComplexRational{mu * q.re, mu * q.im};
    d.t[k] += mu;
  }
  gap.certificate_bound = opt.value;
  gap.lower_certificate_bound = opt.value * poly.shrink;
  if (opt.value <= v) return d;

  // Replace each polygon norm by the modulus itself, or a close rational upper bound.
  Rational tightened;
  for (std::size_t k = 0; k < nk; ++k) {
    const Rational norm2 = d.c[k].norm_squared();
    if (auto exact = exact_sqrt(norm2)) {
      d.t[k] = *exact;
    } else {
      d.t[k] = min(d.t[k], sqrt_upper(norm2, 128));
    }
    tightened += d.t[k] * u[k];
  }
  gap.certificate_bound = min(*gap.certificate_bound, tightened);
  if (tightened <= v) return d;
  return std::nullopt;
}

// For each direction q: max <q, g(x)> over {f_k(x) in u_k * polygon}, solved
// through its dual (few rows, many sign-constrained columns) with the edges
// generated lazily. The primal optimizer is the dual's row multipliers; an
// infeasible dual yields a ray once no edge cuts it off.
std::optional<ComplexWitness> search_witness(const std::vector<ComplexFunctional>& f_list, const RatVector& u,
                                             const ComplexFunctional& g, const Rational& v,
                                             const ModulusPolygon& poly, ComplexGap& gap) {
  const std::size_t nk = f_list.size();
  const auto edges = inscribed_edges(poly);
  const std::size_t ne = edges.size();

  std::vector<RatVector> pool;  // H rows of the primal, indexed k * ne + e
  RatVector cost(nk * ne);
  for (std::size_t k = 0; k < nk; ++k) {
    for (std::size_t e = 0; e < ne; ++e) {
      pool.push_back(edges[e].normal.re * f_list[k].re + edges[e].normal.im * f_list[k].im);
      cost[k * ne + e] = u[k] * edges[e].offset;
    }
  }

  const ModulusPolygon directions = modulus_polygon(std::min(poly.sides, kWitnessDirections));
  // x -> -x maps the constraint set to itself, so half of the directions suffice.
  for (std::size_t l = 0; l < directions.points.size() / 2; ++l) {
    const ComplexRational& q = directions.points[l];
    const PoolLp dual{pool, cost, q.re * g.re + q.im * g.im};
    if (dual.rhs.is_zero()) continue;

    std::set<std::size_t> active;
    for (std::size_t k = 0; k < nk; ++k) {
      for (std::size_t e = 0; e < ne; e += std::max<std::size_t>(1, ne / 4)) active.insert(k * ne + e);
    }
    RatVector x;
    while (true) {
      const std::vector<std::size_t> columns(active.begin(), active.end());
      const auto out = dual.solve(columns);
      if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
        // Edges violated by the restricted optimizer.
        const RatVector& y = opt->duals;
        if (add_violated(active, nk, ne, [&](std::size_t c) { return dot(pool[c], y) - cost[c]; })) continue;
        gap.witness_bound = max(gap.witness_bound, opt->value);
        if (opt->value > v) x = y;
        break;
      }
      const auto* inf = std::get_if<lp::Infeasible>(&out);
      if (inf == nullptr) throw std::logic_error("directional dual cannot be unbounded: x = 0 is feasible");
      // H z <= 0 on the active edges and <w, z> > 0; edges that cut the ray off join the pool.
      const RatVector& z = inf->farkas;
      if (add_violated(active, nk, ne, [&](std::size_t c) { return dot(pool[c], z); })) continue;
      x = (v / dot(dual.rhs, z) + 1) * z;
      gap.witness_bound = max(gap.witness_bound, dot(dual.rhs, x));
      break;
    }
    if (x.dim() == 0) continue;
    ensure(witness_holds(f_list, u, g, v, x), "directional witness");
    return ComplexWitness{std::move(x)};
  }
  return std::nullopt;
}

}  // namespace

void ComplexFunctional::validate() const {
  if (re.dim() != im.dim()) throw std::invalid_argument("complex functional: re and im differ in length");
}

ComplexFunctional scale(const ComplexRational& c, const ComplexFunctional& f) {
  return {c.re * f.re - c.im * f.im, c.re * f.im + c.im * f.re};
}

ComplexFunctional operator+(const ComplexFunctional& a, const ComplexFunctional& b) { return {a.re + b.re, a.im + b.im}; }

ComplexFunctional realify(const std::vector<ComplexRational>& coeffs) {
  const std::size_t n = coeffs.size();
  ComplexFunctional f{RatVector(2 * n), RatVector(2 * n)};
  for (std::size_t j = 0; j < n; ++j) {
    // a (x + i y) = (a.re x - a.im y) + i (a.im x + a.re y)
    f.re[j] = coeffs[j].re;
    f.re[n + j] = -coeffs[j].im;
    f.im[j] = coeffs[j].im;
    f.im[n + j] = coeffs[j].re;
  }
  return f;
}

std::variant<ComplexDominance, ComplexWitness, ComplexGap> complex_scalar_consequence(
    const std::vector<ComplexFunctional>& f_list, const RatVector& u, const ComplexFunctional& g, const Rational& v,
    const ComplexOptions& options) {
  g.validate();
  if (u.dim() != f_list.size()) throw std::invalid_argument("complex consequence: u needs one entry per functional");
  for (const auto& f : f_list) {
    f.validate();
    if (f.dim() != g.dim()) throw std::invalid_argument("complex consequence: functionals differ in dimension");
  }
  for (const auto& e : u) {
    if (e.sign() < 0) throw std::invalid_argument("complex consequence: u must be >= 0");
  }
  if (v.sign() < 0) throw std::invalid_argument("complex consequence: v must be >= 0");
  if (options.max_sides < options.sides) {
    throw std::invalid_argument("complex consequence: max polygon sides below the starting size");
  }

  for (int sides = options.sides;; sides *= 2) {
    const ModulusPolygon poly = modulus_polygon(sides);
    ComplexGap gap;
    gap.sides = sides;
    if (auto d = certify(f_list, u, g, v, poly, gap)) {
      ensure(dominance_holds(f_list, u, g, v, *d), "dominance");
      return *d;
    }
    if (auto w = search_witness(f_list, u, g, v, poly, gap)) return *w;
    if (sides > options.max_sides / 2) return gap;
  }
}

}  // namespace farkas
