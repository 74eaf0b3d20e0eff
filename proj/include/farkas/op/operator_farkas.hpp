#pragma once

// Operator inequalities X = Q^n -> Y = Q^m. Every statement quantified over
// the projections of Y is decided one coordinate (stratum) at a time; the
// per-stratum scalar multipliers are reassembled into diagonal
// orthomorphisms, and failures are reported at the least failing coordinate
// with b = b' = that singleton.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "farkas/model/kantorovich.hpp"
#include "farkas/scalar/scalar.hpp"
#include "farkas/support/options.hpp"

namespace farkas {

/// A_1..A_N and B (all m x n); u_list and v are present together for the
/// inhomogeneous flavor.
struct OperatorSystem {
  std::vector<RatMatrix> a_list;
  RatMatrix b;
  std::optional<std::vector<RatVector>> u_list;
  std::optional<RatVector> v;

  std::size_t m() const { return b.rows(); }
  std::size_t n() const { return b.cols(); }
  bool inhomogeneous() const { return u_list.has_value(); }
  /// Throws std::invalid_argument on inconsistent shapes.
  void validate() const;
  /// The scalar problem at coordinate i.
  ScalarSystem stratum(std::size_t i) const;
};

/// Nonnegative diagonal multipliers, one per operator.
struct OrthoCertificate {
  std::vector<Orthomorphism> alphas;
};

/// The claimed inclusion fails at `coordinate`: x satisfies the hypotheses
/// under mask_b while the conclusion fails under mask_b_prime <= mask_b.
/// `target_block` names the violated block of a matrix inequality.
struct StratumWitness {
  std::size_t coordinate = 0;
  RatVector x;
  Projection mask_b;
  Projection mask_b_prime;
  std::size_t target_block = 0;
};

/// The hypotheses have no solution at `coordinate`.
struct StratumInconsistent {
  std::size_t coordinate = 0;
  Inconsistent certificate;
};

/// B = sum alpha_k A_k with alpha_k >= 0, or a witness at a singleton mask.
std::variant<OrthoCertificate, StratumWitness> operator_consequence(const OperatorSystem& sys,
                                                                    const SolveOptions& options = {});

/// Branch 1 (index 0): b' B x > 0 with every b A_k x <= 0. Branch 2: B = sum alpha_k A_k.
std::variant<StratumWitness, OrthoCertificate> operator_alternative(const OperatorSystem& sys,
                                                                    const SolveOptions& options = {});

/// B = alpha A with alpha of either sign; kappa marks the coordinates with alpha_i >= 0.
struct Proportional {
  Orthomorphism alpha;
  Projection kappa;
};
/// Row i of B is not a multiple of row i of A: A_i x = 0 while B_i x > 0.
struct NotProportional {
  std::size_t coordinate = 0;
  RatVector x;
  std::string reason;
};
std::variant<Proportional, NotProportional> reconstruct(const RatMatrix& a, const RatMatrix& b);

/// Requires u_list and v. Inconsistent takes precedence over a witness, and a
/// witness over a certificate; each is reported at its least coordinate.
std::variant<OrthoCertificate, StratumWitness, StratumInconsistent> inhomogeneous_consequence(
    const OperatorSystem& sys, const SolveOptions& options = {});

/// t x s grid of nonnegative orthomorphisms with B = X A and X u <= v blockwise.
struct MatrixCertificate {
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<std::vector<Orthomorphism>> grid;  // grid[q][p]
};

/// Block p of A occupies rows p*m .. p*m + m - 1 (likewise for B, u, v).
std::variant<MatrixCertificate, StratumWitness, StratumInconsistent> matrix_consequence(
    const RatMatrix& a, const RatMatrix& b, const RatVector& u, const RatVector& v, std::size_t m,
    const SolveOptions& options = {});

/// x -> (P_1(x), ..., P_m(x)) with one polyhedral sublinear functional per coordinate.
struct SublinearOperator {
  std::vector<PolyhedralSublinear> strata;

  std::size_t m() const { return strata.size(); }
  RatVector operator()(const RatVector& x) const;
};

struct SublinearCertificate {
  std::vector<Orthomorphism> alphas;
  std::vector<SublinearDominance> strata;  // the convex weights behind each coordinate
};

/// Does {P >= v} contain the intersection of {P_k <= u_k}? Witness: every
/// P_k(x) <= u_k and P(x)_i < v_i at the reported coordinate.
std::variant<SublinearCertificate, StratumWitness, StratumInconsistent> operator_sublinear_consequence(
    const std::vector<SublinearOperator>& p_list, const std::vector<RatVector>& u_list, const SublinearOperator& p,
    const RatVector& v, const SolveOptions& options = {});

/// Lagrange check at one coordinate. Throws EmptyFeasible when that
/// coordinate's constraint set is empty.
LagrangeReport lagrange_check(const std::vector<SublinearOperator>& p_list, const std::vector<RatVector>& u_list,
                              const SublinearOperator& p, std::size_t stratum);

/// Exact checks used before any artifact is returned.
bool verify_certificate(const OperatorSystem& sys, const OrthoCertificate& cert);
bool verify_witness(const OperatorSystem& sys, const StratumWitness& w);
bool verify_matrix_certificate(const RatMatrix& a, const RatMatrix& b, const RatVector& u, const RatVector& v,
                               std::size_t m, const MatrixCertificate& cert);

/// {kappa B <= 0} contains {kappa A <= 0} and {~kappa B <= 0} contains {~kappa A >= 0},
/// checked stratum by stratum.
bool reconstruct_conditions_hold(const RatMatrix& a, const RatMatrix& b, const Projection& kappa);

}  // namespace farkas
