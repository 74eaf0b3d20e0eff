#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "farkas/exact/rational.hpp"

namespace farkas {

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim) {}
  explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  RatVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static RatVector zeros(std::size_t dim) { return RatVector(dim); }
  static RatVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  /// Entries in [offset, offset + count).
  RatVector slice(std::size_t offset, std::size_t count) const;

  RatVector& operator+=(const RatVector& rhs);
  RatVector& operator-=(const RatVector& rhs);
  RatVector& operator*=(const Rational& s);

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
  RatVector operator-() const;

  friend bool operator==(const RatVector&, const RatVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Inner product; throws std::invalid_argument on a dimension mismatch.
Rational dot(const RatVector& a, const RatVector& b);

/// Componentwise a <= b.
bool leq(const RatVector& a, const RatVector& b);

std::ostream& operator<<(std::ostream& os, const RatVector& v);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RatMatrix identity(std::size_t n);
  /// All rows must share one dimension; `cols` is used when `rows` is empty.
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  void set_row(std::size_t r, const RatVector& values);

  RatMatrix transpose() const;
  bool is_zero() const;
  /// Rows [first, first + count).
  RatMatrix row_block(std::size_t first, std::size_t count) const;

  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatVector operator*(const RatMatrix& m, const RatVector& x);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
/// Stacks the rows of `top` above those of `bottom`.
RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
/// Entrywise a <= b.
bool leq(const RatMatrix& a, const RatMatrix& b);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace farkas
