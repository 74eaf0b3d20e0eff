#include "farkas/complex/polygon.hpp"

#include <stdexcept>
#include <string>

namespace farkas {

namespace {

Rational re_dot(const ComplexRational& a, const ComplexRational& b) { return a.re * b.re + a.im * b.im; }

}  // namespace

ModulusPolygon modulus_polygon(int sides) {
  if (sides < 8 || sides % 2 != 0) {
    throw std::invalid_argument("polygon sides must be an even number >= 8, got " + std::to_string(sides));
  }
  ModulusPolygon poly;
  poly.sides = sides;
  const int half = sides / 2;
  for (int j = 0; j < half; ++j) {
    const Rational t = Rational(-1) + Rational(4L * j, sides);
    const Rational denom = Rational(1) + t * t;
    poly.points.push_back({(Rational(1) - t * t) / denom, Rational(2) * t / denom});
  }
  for (int j = 0; j < half; ++j) poly.points.push_back({-poly.points[j].re, -poly.points[j].im});

  for (int j = 0; j < sides; ++j) {
    const auto& a = poly.points[j];
    const auto& b = poly.points[(j + 1) % sides];
    // cos(gap / 2) = sqrt((1 + cos gap) / 2).
    const Rational c = sqrt_lower((Rational(1) + re_dot(a, b)) / 2);
    if (j == 0 || c < poly.shrink) poly.shrink = c;
  }
  return poly;
}

bool polygon_certifies_modulus(const ModulusPolygon& polygon, const ComplexRational& c, const Rational& t) {
  const Rational bound = t * polygon.shrink;
  for (const auto& d : polygon.points) {
    if (re_dot(d, c) > bound) return false;
  }
  return true;
}

std::vector<PolygonEdge> inscribed_edges(const ModulusPolygon& polygon) {
  std::vector<PolygonEdge> edges;
  const std::size_t m = polygon.points.size();
  for (std::size_t j = 0; j < m; ++j) {
    const auto& a = polygon.points[j];
    const auto& b = polygon.points[(j + 1) % m];
    edges.push_back({a + b, Rational(1) + re_dot(a, b)});
  }
  return edges;
}

}  // namespace farkas
