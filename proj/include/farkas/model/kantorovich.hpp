#pragma once

// Finite model of the order-theoretic environment: X = Q^n, Y = Q^m with the
// componentwise order. The Boolean algebra of band projections on Y is the
// algebra of coordinate masks, orthomorphisms are diagonal maps, and every
// linear operator X -> Y is dominated. Operator statements quantified over
// all projections are decided stratum by stratum (one coordinate of Y at a
// time).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "farkas/exact/matrix.hpp"

namespace farkas {

struct SpaceSpec {
  std::size_t n = 1;  // dim X
  std::size_t m = 1;  // dim Y

  /// Throws std::invalid_argument unless n >= 1 and m >= 1.
  void validate() const;
  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// Coordinate mask on Y; an element of the base.
class Projection {
 public:
  Projection() = default;
  explicit Projection(std::vector<bool> mask) : mask_(std::move(mask)) {}

  static Projection none(std::size_t m) { return Projection(std::vector<bool>(m, false)); }
  static Projection all(std::size_t m) { return Projection(std::vector<bool>(m, true)); }
  static Projection singleton(std::size_t m, std::size_t i);
  /// The mask whose bit i is bit i of `bits`; requires m <= 64.
  static Projection from_bits(std::size_t m, std::uint64_t bits);
  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static Projection parse(std::string_view text);

  std::size_t size() const { return mask_.size(); }
  bool operator[](std::size_t i) const { return mask_[i]; }
  std::size_t count() const;
  bool is_zero() const { return count() == 0; }

  Projection meet(const Projection& other) const;
  Projection join(const Projection& other) const;
  Projection complement() const;
  /// this <= other in the Boolean order.
  bool leq(const Projection& other) const;

  RatVector apply(const RatVector& y) const;
  std::string str() const;

  friend bool operator==(const Projection&, const Projection&) = default;

 private:
  std::vector<bool> mask_;
};

/// Diagonal operator on Y. `nonnegative` marks members of the positive cone
/// and is checked on construction.
class Orthomorphism {
 public:
  Orthomorphism() = default;
  explicit Orthomorphism(RatVector diag, bool nonnegative = false);

  static Orthomorphism identity(std::size_t m);
  static Orthomorphism zero(std::size_t m) { return Orthomorphism(RatVector::zeros(m), true); }
  static Orthomorphism from_projection(const Projection& p);

  std::size_t size() const { return diag_.dim(); }
  const RatVector& diag() const { return diag_; }
  const Rational& operator[](std::size_t i) const { return diag_[i]; }
  bool flagged_nonnegative() const { return nonnegative_; }
  /// True when every diagonal entry is >= 0, regardless of the flag.
  bool is_positive() const;

  RatVector apply(const RatVector& y) const;
  /// Row-wise scaling: (alpha T) x = alpha (T x).
  RatMatrix apply(const RatMatrix& t) const;

  Orthomorphism compose(const Orthomorphism& other) const;
  Orthomorphism add(const Orthomorphism& other) const;

  friend bool operator==(const Orthomorphism& a, const Orthomorphism& b) { return a.diag_ == b.diag_; }

 private:
  RatVector diag_;
  bool nonnegative_ = false;
};

/// Row i of T: the scalar functional T induces at stratum i.
std::vector<RatVector> coordinate_slices(const RatMatrix& t);
/// Inverse of coordinate_slices.
RatMatrix assemble_slices(const std::vector<RatVector>& slices, std::size_t n);

/// b(T x).
RatVector masked_apply(const Projection& b, const RatMatrix& t, const RatVector& x);

/// All 2^m masks in binary order; m <= 20.
std::vector<Projection> all_masks(std::size_t m);

}  // namespace farkas
