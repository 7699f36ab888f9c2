#include "ordercone/rational.hpp"

#include <charconv>

namespace ordercone {

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_token(num) || (slash != std::string_view::npos && !is_integer_token(den)))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer p{std::string(num)};
  Integer q = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

RVector& RVector::operator+=(const RVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("RVector dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RVector& RVector::operator-=(const RVector& o) {
  if (dim() != o.dim()) throw std::invalid_argument("RVector dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RVector& RVector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  nrows_ = rows.size();
  ncols_ = nrows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(nrows_ * ncols_);
  for (const auto& r : rows) {
    if (r.size() != ncols_) throw std::invalid_argument("ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows, std::size_t ncols) {
  RMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

RVector RMatrix::row(std::size_t i) const {
  RVector v(ncols_);
  for (std::size_t j = 0; j < ncols_; ++j) v[j] = (*this)(i, j);
  return v;
}

RVector RMatrix::col(std::size_t j) const {
  RVector v(nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void RMatrix::set_row(std::size_t i, const RVector& v) {
  if (v.dim() != ncols_) throw std::invalid_argument("set_row: dimension mismatch");
  for (std::size_t j = 0; j < ncols_; ++j) (*this)(i, j) = v[j];
}

RMatrix RMatrix::transposed() const {
  RMatrix t(ncols_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RMatrix RMatrix::vstack(const RMatrix& other) const {
  if (other.ncols_ != ncols_ && other.nrows_ != 0)
    throw std::invalid_argument("vstack: column mismatch");
  RMatrix out(nrows_ + other.nrows_, ncols_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < ncols_; ++j) out(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.nrows_; ++i)
    for (std::size_t j = 0; j < ncols_; ++j) out(nrows_ + i, j) = other(i, j);
  return out;
}

RVector operator*(const RMatrix& m, const RVector& v) {
  if (m.cols() != v.dim()) throw std::invalid_argument("mat*vec: dimension mismatch");
  RVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat*mat: dimension mismatch");
  RMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat-mat: dimension mismatch");
  RMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat+mat: dimension mismatch");
  RMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

}  // namespace ordercone
