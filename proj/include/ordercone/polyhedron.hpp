#pragma once

#include <optional>

#include "ordercone/rational.hpp"

namespace ordercone {

// The set {z : A*z >= b}. Carries no claim of nonemptiness.
struct HPolyhedron {
  RMatrix A;
  RVector b;

  HPolyhedron() = default;
  HPolyhedron(RMatrix a, RVector rhs) : A(std::move(a)), b(std::move(rhs)) {
    if (A.rows() != b.dim()) throw std::invalid_argument("HPolyhedron: A/b row mismatch");
  }

  static HPolyhedron cone_rows(RMatrix a) {
    RVector zero(a.rows());
    return HPolyhedron(std::move(a), std::move(zero));
  }

  std::size_t dim() const { return A.cols(); }
  std::size_t num_rows() const { return A.rows(); }

  bool satisfies(const RVector& z) const {
    return violated_row(z) == std::nullopt;
  }

  std::optional<std::size_t> violated_row(const RVector& z) const {
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (dot(A.row(i), z) < b[i]) return i;
    return std::nullopt;
  }
};

}  // namespace ordercone
