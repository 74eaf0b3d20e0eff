#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "farkas/exact/matrix.hpp"

namespace farkas {

struct RowReduction {
  RatMatrix rref;
  std::vector<std::size_t> pivots;  // pivot columns, ascending
  std::size_t rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination. The pivot row
/// for each column is the first row at or below the current one with a
/// nonzero entry, so the output is deterministic.
RowReduction row_reduce(const RatMatrix& m);

/// Some x with m * x = b, or nullopt when b is outside the range of m. Free
/// variables are set to zero. Throws std::invalid_argument if b.dim() != m.rows().
std::optional<RatVector> solve_exact(const RatMatrix& m, const RatVector& b);

/// Basis of {x : m * x = 0}, one vector per free column of the RREF; empty iff
/// m is injective.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

inline std::size_t rank(const RatMatrix& m) { return row_reduce(m).rank; }

}  // namespace farkas
