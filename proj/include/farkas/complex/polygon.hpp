#pragma once

// Rational points on the unit circle used to bound complex moduli without
// square roots.

#include <vector>

#include "farkas/exact/rational.hpp"

namespace farkas {

struct ModulusPolygon {
  int sides = 0;
  /// Unit vectors in counterclockwise order, each with re^2 + im^2 = 1 exactly.
  std::vector<ComplexRational> points;
  /// A rational lower bound on the cosine of half the largest angular gap,
  /// i.e. on the inradius of the inscribed polygon.
  Rational shrink;
};

/// Points from the tangent half-angle grid t_j = -1 + 4j/M (j < M/2) and their
/// negations. Grids are nested: every point of M is a point of 2M. Throws
/// std::invalid_argument unless M >= 8 and M is even.
ModulusPolygon modulus_polygon(int sides);

/// max_j Re(conj(d_j) c) <= t * shrink, which implies |c| <= t.
bool polygon_certifies_modulus(const ModulusPolygon& polygon, const ComplexRational& c, const Rational& t);

/// Edge j of the inscribed polygon: z lies inside iff Re(conj(normal) z) <= offset for every edge.
struct PolygonEdge {
  ComplexRational normal;
  Rational offset;
};
std::vector<PolygonEdge> inscribed_edges(const ModulusPolygon& polygon);

}  // namespace farkas
