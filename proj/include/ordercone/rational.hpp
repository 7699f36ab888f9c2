// Exact rational scalars, vectors and matrices. Everything downstream of this
// header is exact: no floating point appears in any decision path.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordercone {

using Integer = boost::multiprecision::mpz_int;

// Stored in lowest terms with positive denominator (GMP canonical form).
using Rational = boost::multiprecision::mpq_rational;

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

// Accepts "p", "p/q" and decimal-free signed integers; throws
// std::invalid_argument on anything else (including q == 0).
Rational parse_rational(std::string_view text);

class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t dim) : entries_(dim) {}
  RVector(std::initializer_list<Rational> init) : entries_(init) {}
  explicit RVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_.at(i); }
  Rational& operator[](std::size_t i) { return entries_.at(i); }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const RVector& a, const RVector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const RVector& a, const RVector& b) { return !(a == b); }

  // Lexicographic; used only to make outputs canonical and diffable.
  friend bool operator<(const RVector& a, const RVector& b) {
    return a.entries_ < b.entries_;
  }

  RVector& operator+=(const RVector& o);
  RVector& operator-=(const RVector& o);
  RVector& operator*=(const Rational& s);

  friend RVector operator+(RVector a, const RVector& b) { return a += b; }
  friend RVector operator-(RVector a, const RVector& b) { return a -= b; }
  friend RVector operator*(const Rational& s, RVector v) { return v *= s; }
  friend RVector operator-(RVector v) {
    for (auto& e : v.entries_) e = -e;
    return v;
  }

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RVector& a, const RVector& b);

// Dense row-major rational matrix.
class RMatrix {
 public:
  RMatrix() : nrows_(0), ncols_(0) {}
  RMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), data_(nrows * ncols) {}
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t ncols);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return data_[i * ncols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    check_index(i, j);
    return data_[i * ncols_ + j];
  }

  RVector row(std::size_t i) const;
  RVector col(std::size_t j) const;
  void set_row(std::size_t i, const RVector& v);

  RMatrix transposed() const;

  // Stack other's rows below this matrix; column counts must agree.
  RMatrix vstack(const RMatrix& other) const;

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RMatrix& a, const RMatrix& b) { return !(a == b); }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= nrows_ || j >= ncols_) throw std::out_of_range("RMatrix index");
  }

  std::size_t nrows_, ncols_;
  std::vector<Rational> data_;
};

RVector operator*(const RMatrix& m, const RVector& v);
RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a, const RMatrix& b);
RMatrix operator+(const RMatrix& a, const RMatrix& b);

}  // namespace ordercone
