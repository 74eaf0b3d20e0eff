#pragma once

// Instance families shared by the unit tests and the acceptance runner.

#include "farkas/complex/complex_ineq.hpp"
#include "support/random.hpp"

namespace farkas::testing {

/// A rational point on the unit circle from a random tangent half-angle.
inline ComplexRational circle_point(Gen& gen) {
  const Rational t(gen.integer(-6, 6), gen.integer(1, 5));
  const Rational d = 1 + t * t;
  ComplexRational z{(1 - t * t) / d, 2 * t / d};
  if (gen.coin()) z = {-z.re, -z.im};
  return z;
}

inline ComplexOperator random_complex_operator(Gen& gen, std::size_t m, std::size_t n) {
  return {gen.matrix(m, n), gen.matrix(m, n)};
}

/// B = sum_k c_k A_k with c_k = r_k * (unit circle point), so |c_k| = r_k is
/// rational, and v = sum_k r_k u_k plus a nonnegative slack (zero about a
/// third of the time). The claimed inclusion therefore holds.
inline ComplexProblem circle_multiplier_problem(Gen& gen, std::size_t m, std::size_t n, std::size_t count) {
  ComplexProblem p;
  p.b = {RatMatrix(m, n), RatMatrix(m, n)};
  p.v = RatVector(m);
  for (std::size_t k = 0; k < count; ++k) {
    p.a_list.push_back(random_complex_operator(gen, m, n));
    p.u_list.push_back(gen.nonnegative_vector(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    ComplexFunctional row{RatVector(n), RatVector(n)};
    for (std::size_t k = 0; k < count; ++k) {
      const Rational r = gen.nonnegative(4, 3);
      const ComplexRational unit = circle_point(gen);
      row = row + scale({r * unit.re, r * unit.im}, p.a_list[k].stratum(i));
      p.v[i] += r * p.u_list[k][i];
    }
    if (!gen.coin(0.35)) p.v[i] += gen.nonnegative(2, 3);
    p.b.re.set_row(i, row.re);
    p.b.im.set_row(i, row.im);
  }
  return p;
}

}  // namespace farkas::testing
