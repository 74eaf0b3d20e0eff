#include "farkas/model/kantorovich.hpp"

#include <cstdint>
#include <stdexcept>

namespace farkas {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

}  // namespace

void SpaceSpec::validate() const {
  if (n < 1 || m < 1) throw std::invalid_argument("SpaceSpec requires n >= 1 and m >= 1");
}

Projection Projection::singleton(std::size_t m, std::size_t i) {
  if (i >= m) throw std::out_of_range("singleton projection index out of range");
  Projection p = none(m);
  p.mask_[i] = true;
  return p;
}

Projection Projection::from_bits(std::size_t m, std::uint64_t bits) {
  if (m > 64) throw std::invalid_argument("from_bits supports at most 64 coordinates");
  Projection p = none(m);
  for (std::size_t i = 0; i < m; ++i) p.mask_[i] = (bits >> i) & 1u;
  return p;
}

Projection Projection::parse(std::string_view text) {
  std::vector<bool> mask;
  mask.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("projection mask must consist of '0' and '1'");
    mask.push_back(c == '1');
  }
  return Projection(std::move(mask));
}

std::size_t Projection::count() const {
  std::size_t c = 0;
  for (bool b : mask_) c += b;
  return c;
}

Projection Projection::meet(const Projection& other) const {
  require_same_size(size(), other.size(), "projection meet");
  Projection out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.mask_[i] = mask_[i] && other.mask_[i];
  return out;
}

Projection Projection::join(const Projection& other) const {
  require_same_size(size(), other.size(), "projection join");
  Projection out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.mask_[i] = mask_[i] || other.mask_[i];
  return out;
}

Projection Projection::complement() const {
  Projection out = *this;
  out.mask_.flip();
  return out;
}

bool Projection::leq(const Projection& other) const {
  require_same_size(size(), other.size(), "projection order");
  for (std::size_t i = 0; i < size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

RatVector Projection::apply(const RatVector& y) const {
  require_same_size(size(), y.dim(), "projection apply");
  RatVector out(y.dim());
  for (std::size_t i = 0; i < size(); ++i) {
    if (mask_[i]) out[i] = y[i];
  }
  return out;
}

std::string Projection::str() const {
  std::string s;
  s.reserve(size());
  for (bool b : mask_) s.push_back(b ? '1' : '0');
  return s;
}

Orthomorphism::Orthomorphism(RatVector diag, bool nonnegative) : diag_(std::move(diag)), nonnegative_(nonnegative) {
  if (nonnegative_ && !is_positive()) {
    throw std::invalid_argument("orthomorphism flagged nonnegative has a negative diagonal entry");
  }
}

Orthomorphism Orthomorphism::identity(std::size_t m) {
  RatVector d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = 1;
  return Orthomorphism(std::move(d), true);
}

Orthomorphism Orthomorphism::from_projection(const Projection& p) {
  RatVector d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] ? 1 : 0;
  return Orthomorphism(std::move(d), true);
}

bool Orthomorphism::is_positive() const {
  for (const auto& e : diag_) {
    if (e.sign() < 0) return false;
  }
  return true;
}

RatVector Orthomorphism::apply(const RatVector& y) const {
  require_same_size(size(), y.dim(), "orthomorphism apply");
  RatVector out(y.dim());
  for (std::size_t i = 0; i < size(); ++i) out[i] = diag_[i] * y[i];
  return out;
}

RatMatrix Orthomorphism::apply(const RatMatrix& t) const {
  require_same_size(size(), t.rows(), "orthomorphism apply");
  RatMatrix out = t;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) out(r, c) *= diag_[r];
  }
  return out;
}

Orthomorphism Orthomorphism::compose(const Orthomorphism& other) const {
  return Orthomorphism(apply(other.diag_), nonnegative_ && other.nonnegative_);
}

Orthomorphism Orthomorphism::add(const Orthomorphism& other) const {
  require_same_size(size(), other.size(), "orthomorphism sum");
  return Orthomorphism(diag_ + other.diag_, nonnegative_ && other.nonnegative_);
}

std::vector<RatVector> coordinate_slices(const RatMatrix& t) {
  std::vector<RatVector> slices;
  slices.reserve(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) slices.push_back(t.row(i));
  return slices;
}

RatMatrix assemble_slices(const std::vector<RatVector>& slices, std::size_t n) {
  return RatMatrix::from_rows(slices, n);
}

RatVector masked_apply(const Projection& b, const RatMatrix& t, const RatVector& x) { return b.apply(t * x); }

std::vector<Projection> all_masks(std::size_t m) {
  if (m > 20) throw std::invalid_argument("all_masks: m too large to enumerate");
  std::vector<Projection> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) out.push_back(Projection::from_bits(m, bits));
  return out;
}

}  // namespace farkas
