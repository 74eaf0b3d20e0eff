#pragma once

// Operator inequalities with complex moduli: X = Q^n into Y + iY with Y = Q^m.
// Each coordinate is a complex scalar problem; certificates are complex
// diagonal multipliers with exact rational modulus bounds.

#include <variant>
#include <vector>

#include "farkas/op/operator_farkas.hpp"
#include "farkas/scalar/complex_scalar.hpp"
#include "farkas/support/options.hpp"

namespace farkas {

struct ComplexOperator {
  RatMatrix re;
  RatMatrix im;

  std::size_t rows() const { return re.rows(); }
  std::size_t cols() const { return re.cols(); }
  ComplexFunctional stratum(std::size_t i) const { return {re.row(i), im.row(i)}; }
  std::vector<ComplexRational> operator()(const RatVector& x) const;
  void validate() const;
};

/// Does |B(x)| <= v follow from |A_k(x)| <= u_k for every k, coordinatewise?
struct ComplexProblem {
  std::vector<ComplexOperator> a_list;
  std::vector<RatVector> u_list;
  ComplexOperator b;
  RatVector v;

  std::size_t m() const { return b.rows(); }
  std::size_t n() const { return b.cols(); }
  /// Throws std::invalid_argument on shape mismatches or negative bounds.
  void validate() const;
};

/// B = sum_k c_k A_k with c[i][k] the diagonal entry of c_k at coordinate i,
/// t[i][k] >= |c[i][k]| and sum_k t[i][k] u_k[i] <= v[i].
struct ComplexCertificate {
  std::vector<std::vector<ComplexRational>> c;
  std::vector<RatVector> t;
  int polygon_sides = 0;  // largest polygon used by any coordinate
};

struct StratumGap {
  std::size_t stratum = 0;
  ComplexGap gap;
};

/// Neither artifact was found at some coordinates, even at the largest polygon.
struct ComplexUndecided {
  std::vector<StratumGap> strata;
};

/// A witness anywhere wins, then Undecided, then the certificate. Uses
/// options.polygon_sides and options.max_polygon_sides.
std::variant<ComplexCertificate, StratumWitness, ComplexUndecided> complex_consequence(
    const ComplexProblem& problem, const SolveOptions& options = {});

/// Exact checks with squared moduli only.
bool verify_complex_certificate(const ComplexProblem& problem, const ComplexCertificate& cert);
/// |A_k(x)_i|^2 <= u_k[i]^2 for every k and |B(x)_i|^2 > v[i]^2 at the witness coordinate.
bool verify_complex_witness(const ComplexProblem& problem, const StratumWitness& w);

}  // namespace farkas
