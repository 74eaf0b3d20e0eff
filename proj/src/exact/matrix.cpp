#include "farkas/exact/matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace farkas {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

RatVector RatVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("unit vector index out of range");
  RatVector v(dim);
  v[index] = 1;
  return v;
}

bool RatVector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RatVector RatVector::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > dim()) throw std::out_of_range("vector slice out of range");
  return RatVector(std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                                         entries_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

RatVector& RatVector::operator+=(const RatVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector addition");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += rhs[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= rhs[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatVector RatVector::operator-() const {
  RatVector out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  require_same_dim(a.dim(), b.dim(), "dot product");
  Rational sum;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

bool leq(const RatVector& a, const RatVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector comparison");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().dim();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("matrix row out of range");
  return RatVector(std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

RatVector RatMatrix::col(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("matrix column out of range");
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void RatMatrix::set_row(std::size_t r, const RatVector& values) {
  if (r >= rows_) throw std::out_of_range("matrix row out of range");
  require_same_dim(values.dim(), cols_, "set_row");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RatMatrix RatMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row block out of range");
  RatMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  }
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  require_same_dim(rows_, rhs.rows_, "matrix addition (rows)");
  require_same_dim(cols_, rhs.cols_, "matrix addition (cols)");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  require_same_dim(rows_, rhs.rows_, "matrix subtraction (rows)");
  require_same_dim(cols_, rhs.cols_, "matrix subtraction (cols)");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

RatVector operator*(const RatMatrix& m, const RatVector& x) {
  require_same_dim(m.cols(), x.dim(), "matrix-vector product");
  RatVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !x[c].is_zero()) sum += m(r, c) * x[c];
    }
    y[r] = std::move(sum);
  }
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a.cols(), b.rows(), "matrix product");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  require_same_dim(top.cols(), bottom.cols(), "vstack");
  RatMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) out.set_row(r, top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row(r));
  return out;
}

bool leq(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a.rows(), b.rows(), "matrix comparison (rows)");
  require_same_dim(a.cols(), b.cols(), "matrix comparison (cols)");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) > b(r, c)) return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? ", " : "") << m.row(r);
  return os << ']';
}

}  // namespace farkas
