#pragma once

// Scalar (single-stratum) consequence relations among linear and polyhedral
// sublinear inequalities. Every outcome carries an artifact that can be
// checked with exact arithmetic alone.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "farkas/exact/matrix.hpp"

namespace farkas {

/// Functionals f_1..f_N (rows of f_rows) and target g; u and v are present
/// together for the inhomogeneous flavor.
struct ScalarSystem {
  RatMatrix f_rows;
  RatVector g;
  std::optional<RatVector> u;
  std::optional<Rational> v;

  std::size_t dim() const { return g.dim(); }
  std::size_t count() const { return f_rows.rows(); }
  bool inhomogeneous() const { return u.has_value(); }
  /// Throws std::invalid_argument on inconsistent shapes.
  void validate() const;
};

/// g = sum_k alpha_k f_k with alpha >= 0 (plus sum alpha_k u_k <= v when inhomogeneous).
struct Dominance {
  RatVector alpha;
};

/// A point violating the claimed consequence; what it satisfies depends on the call.
struct Witness {
  RatVector x;
};

/// weights >= 0, weights^T rows = 0 and weights^T rhs < 0: the system
/// rows * x <= rhs has no solution.
struct Inconsistent {
  RatMatrix rows;
  RatVector rhs;
  RatVector weights;
};

/// Exact check of an Inconsistent certificate.
bool proves_empty(const Inconsistent& c);

/// Builds the Inconsistent artifact from an LP certificate of {rows x <= rhs}.
Inconsistent inconsistency_from_farkas(const RatMatrix& rows, const RatVector& rhs, const RatVector& farkas);

struct ScaleDominance {
  Rational alpha;  // g = alpha f, alpha >= 0
};

/// g follows from f, i.e. {f <= 0} is inside {g <= 0}. Witness: <f,x> <= 0 < <g,x>.
std::variant<ScaleDominance, Witness> single_consequence(const RatVector& f, const RatVector& g);

/// Witness: every <f_k,x> <= 0 and <g,x> >= 1.
std::variant<Dominance, Witness> homogeneous_consequence(const ScalarSystem& sys);

struct Branch1 {
  RatVector x;  // <g,x> >= 1, <f_k,x> <= 0
};
struct Branch2 {
  RatVector alpha;  // g = sum alpha_k f_k, alpha >= 0
};
/// Exactly one of the two branches holds.
std::variant<Branch1, Branch2> scalar_alternative(const ScalarSystem& sys);

struct Factor {
  RatMatrix x;  // x * a = b
};
struct NoFactor {
  RatVector x;  // a x = 0, b x != 0
};
/// Solves X A = B, or exhibits a vector in ker A outside ker B.
std::variant<Factor, NoFactor> factorize(const RatMatrix& a, const RatMatrix& b);

struct PositiveFactor {
  RatVector x;  // >= 0 with x^T a = b
};

/// Raised when A(X) - W+ = W fails; `index` is a coordinate i for which
/// A x <= -e_i has no solution.
class HypothesisFailed : public std::runtime_error {
 public:
  HypothesisFailed(std::size_t index, RatVector farkas);
  std::size_t index() const { return index_; }
  const RatVector& farkas() const { return farkas_; }

 private:
  std::size_t index_;
  RatVector farkas_;
};

/// Nonnegative factorization of the functional b through a (s x n). Witness:
/// a x <= 0 and <b,x> >= 1.
std::variant<PositiveFactor, Witness> positive_factorize(const RatMatrix& a, const RatVector& b);

/// Requires u and v. Witness: f_k(x) <= u_k for all k and <g,x> > v.
std::variant<Dominance, Witness, Inconsistent> inhomogeneous_scalar(const ScalarSystem& sys);

/// x -> max_j <p_j, x>.
struct PolyhedralSublinear {
  RatMatrix generators;

  std::size_t dim() const { return generators.cols(); }
  Rational operator()(const RatVector& x) const;
  void validate() const;
};

/// alpha_k >= 0 with sum alpha_k u_k <= -v and p + sum alpha_k p_k >= 0. The
/// last property is witnessed by convex weights: lambda over the generators
/// of p and mu[k] over those of p_k with
/// sum_j lambda_j p_j + sum_k alpha_k sum_j mu[k]_j p_kj = 0.
struct SublinearDominance {
  RatVector alpha;
  RatVector lambda;
  std::vector<RatVector> mu;
};

/// Does {p >= v} contain the intersection of {p_k <= u_k}? Witness: every
/// p_k(x) <= u_k and p(x) < v.
std::variant<SublinearDominance, Witness, Inconsistent> sublinear_consequence(
    const std::vector<PolyhedralSublinear>& p_list, const RatVector& u, const PolyhedralSublinear& p,
    const Rational& v);

/// A rational or minus infinity.
struct ExtendedRational {
  std::optional<Rational> value;  // empty means -infinity

  static ExtendedRational minus_infinity() { return {}; }
  bool is_minus_infinity() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "-inf"; }
  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
};

/// Raised when the constraint set of a Lagrange check is empty.
class EmptyFeasible : public std::runtime_error {
 public:
  explicit EmptyFeasible(Inconsistent certificate);
  const Inconsistent& certificate() const { return certificate_; }

 private:
  Inconsistent certificate_;
};

struct LagrangeReport {
  ExtendedRational primal;             // inf { p(x) : p_k(x) <= u_k }
  RatVector multipliers;               // alpha >= 0, one per constraint
  ExtendedRational dual;               // inf_x p(x) + sum alpha_k (p_k(x) - u_k)
  std::optional<RatVector> minimizer;  // present when the primal is attained
};

/// Primal value by the epigraph LP, multipliers from its duals, and the dual
/// value recomputed independently from those multipliers.
LagrangeReport lagrange_scalar(const std::vector<PolyhedralSublinear>& p_list, const RatVector& u,
                               const PolyhedralSublinear& p);

}  // namespace farkas
