#include "farkas/exact/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace farkas {

namespace {

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

RowReduction row_reduce(const RatMatrix& m) {
  RowReduction out{m, {}, 0};
  RatMatrix& a = out.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    swap_rows(a, row, pivot);

    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::optional<RatVector> solve_exact(const RatMatrix& m, const RatVector& b) {
  if (b.dim() != m.rows()) throw std::invalid_argument("solve_exact: right-hand side dimension mismatch");
  // Reduce the augmented matrix [m | b].
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowReduction red = row_reduce(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;

  RatVector x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.rref(i, m.cols());
  return x;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RowReduction red = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace farkas
