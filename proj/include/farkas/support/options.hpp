#pragma once

#include <cstddef>

namespace farkas {

/// Knobs shared by the decision engines.
struct SolveOptions {
  /// Worker threads for independent strata and orthants; 0 or 1 runs inline.
  unsigned jobs = 1;
  /// Starting polygon size for complex moduli; doubled up to max_polygon_sides.
  int polygon_sides = 64;
  int max_polygon_sides = 1024;
  /// Largest domain dimension for which orthants are enumerated.
  std::size_t orthant_cap = 12;
};

}  // namespace farkas
