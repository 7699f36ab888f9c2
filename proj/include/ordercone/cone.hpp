// The ordered space (X, X+): a finite-dimensional vector space with a
// pointed, generating polyhedral cone, stored in both generator and
// halfspace form, plus the order relation the cone induces.
//
// ConeSpace is immutable after construction and every operation in this
// header is a pure function, so concurrent use needs no synchronization.
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ordercone/polyhedron.hpp"
#include "ordercone/rational.hpp"

namespace ordercone {

class ConeError : public std::runtime_error {
 public:
  enum class Kind { not_pointed, not_generating, representation_mismatch, bad_input };

  ConeError(Kind k, std::string message, std::optional<RVector> w = std::nullopt)
      : std::runtime_error(std::move(message)), kind(k), witness(std::move(w)) {}

  Kind kind;
  // not_pointed: v != 0 with both v and -v in the cone;
  // not_generating: c != 0 orthogonal to every generator.
  std::optional<RVector> witness;
};

class ConeSpace {
 public:
  // Both factories certify pointedness and the generating property and
  // store canonical (irredundant, normalized, sorted) representations;
  // degenerate inputs are rejected with a ConeError carrying a witness.
  static ConeSpace from_generators(std::vector<RVector> generators);
  static ConeSpace from_halfspaces(const RMatrix& A);

  std::size_t dim() const { return dim_; }
  const std::vector<RVector>& generators() const { return generators_; }
  const RMatrix& halfspaces() const { return halfspaces_; }

  // Certified at construction.
  bool pointed() const { return true; }
  bool generating() const { return true; }

  // X+ as {z : A z >= 0}.
  HPolyhedron positive_cone() const { return HPolyhedron::cone_rows(halfspaces_); }

  // A is square and invertible exactly for simplicial cones.
  bool simplicial() const { return halfspaces_.rows() == dim_; }

  friend bool operator==(const ConeSpace& a, const ConeSpace& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  ConeSpace(std::size_t dim, std::vector<RVector> gens, RMatrix halfspaces)
      : dim_(dim), generators_(std::move(gens)), halfspaces_(std::move(halfspaces)) {}

  std::size_t dim_;
  std::vector<RVector> generators_;
  RMatrix halfspaces_;
};

struct OrderVerdict {
  bool holds;
  std::optional<std::size_t> violated_row;  // index into halfspaces when !holds
};

// x in X+ ?
OrderVerdict contains(const ConeSpace& K, const RVector& x);

// x <= y, i.e. y - x in X+.
OrderVerdict leq(const ConeSpace& K, const RVector& x, const RVector& y);

// Does n*x <= y hold for every positive integer n? For closed (hence all
// polyhedral) cones this is equivalent to -x in X+ and y - x in X+.
bool is_bounded_multiple(const ConeSpace& K, const RVector& x, const RVector& y);

// Extreme rays of span(basis) intersected with X+. The basis must be
// linearly independent; an empty basis yields the trivial cone {0}.
std::vector<RVector> subspace_cone_generators(const ConeSpace& K,
                                              std::span<const RVector> basis);

}  // namespace ordercone
