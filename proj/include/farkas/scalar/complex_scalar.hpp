#pragma once

// Complex-modulus consequence over a real coordinate domain:
// does |g(x)| <= v follow from |f_k(x)| <= u_k for all k?

#include <optional>
#include <variant>
#include <vector>

#include "farkas/exact/matrix.hpp"

namespace farkas {

/// x -> <re, x> + i <im, x> for x in Q^n.
struct ComplexFunctional {
  RatVector re;
  RatVector im;

  std::size_t dim() const { return re.dim(); }
  ComplexRational operator()(const RatVector& x) const { return {dot(re, x), dot(im, x)}; }
  void validate() const;
  friend bool operator==(const ComplexFunctional&, const ComplexFunctional&) = default;
};

/// c * f.
ComplexFunctional scale(const ComplexRational& c, const ComplexFunctional& f);
ComplexFunctional operator+(const ComplexFunctional& a, const ComplexFunctional& b);

/// The complex-linear functional z -> sum_j coeffs[j] z_j on C^n, written over
/// the real coordinates (Re z, Im z) of Q^{2n}.
ComplexFunctional realify(const std::vector<ComplexRational>& coeffs);

/// g = sum_k c_k f_k with t_k >= |c_k| and sum_k t_k u_k <= v.
struct ComplexDominance {
  std::vector<ComplexRational> c;
  RatVector t;
  int sides = 0;
};

/// |f_k(x)|^2 <= u_k^2 for all k and |g(x)|^2 > v^2.
struct ComplexWitness {
  RatVector x;
};

/// Bounds left when neither artifact was found at the largest polygon.
/// witness_bound <= sup |g(x)| over the constraint set; when a representation
/// exists, lower_certificate_bound <= min sum |c_k| u_k <= certificate_bound.
struct ComplexGap {
  int sides = 0;
  Rational witness_bound;
  std::optional<Rational> certificate_bound;
  std::optional<Rational> lower_certificate_bound;
};

struct ComplexOptions {
  int sides = 64;
  int max_sides = 1024;
};

/// Requires u >= 0 and v >= 0; throws std::invalid_argument otherwise or for a
/// malformed polygon size. Dominance and Witness are verified exactly before
/// they are returned.
std::variant<ComplexDominance, ComplexWitness, ComplexGap> complex_scalar_consequence(
    const std::vector<ComplexFunctional>& f_list, const RatVector& u, const ComplexFunctional& g, const Rational& v,
    const ComplexOptions& options = {});

}  // namespace farkas
