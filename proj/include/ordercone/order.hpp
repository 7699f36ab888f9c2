// Upper-bound sets, polyhedron comparison, disjointness and infima, all as
// exact polyhedral decisions. Every verdict carries enough certificate data
// (dual multipliers, Farkas vectors or witness points) to be re-checked by
// arithmetic alone.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordercone/cone.hpp"
#include "ordercone/lp.hpp"
#include "ordercone/polyhedron.hpp"

namespace ordercone {

// {z : z >= s for every s in S}, as one stacked system A(z - s) >= 0.
HPolyhedron upper_bound_set(const ConeSpace& K, std::span<const RVector> S);

// {f : f <= s for every s in S}.
HPolyhedron lower_bound_set(const ConeSpace& K, std::span<const RVector> S);

struct RowValidity {
  std::size_t row;  // row of Q this proof is for
  ValidityVerdict verdict;
};

struct SubsetVerdict {
  bool subset;
  std::optional<std::size_t> failed_row;  // row of Q
  std::optional<RVector> witness;         // point of P violating that row
  std::vector<RowValidity> proofs;        // one per row of Q when subset holds
};

SubsetVerdict poly_subset(const HPolyhedron& P, const HPolyhedron& Q);

struct EqualityVerdict {
  bool equal;
  SubsetVerdict forward;                   // P subset of Q
  std::optional<SubsetVerdict> backward;   // Q subset of P; skipped if forward failed
};

EqualityVerdict poly_equal(const HPolyhedron& P, const HPolyhedron& Q);

enum class DisjointFailureDirection { u1_not_subset_u2, u2_not_subset_u1 };

// x and y are disjoint when the sets of upper bounds of {x+y, -x-y} and of
// {x-y, y-x} coincide. The raw definition is used for all inputs; the
// infimum characterisation for positive pairs is a separate decision
// (is_infimum_zero) so the two can be compared against each other.
struct DisjointnessVerdict {
  bool disjoint;
  std::optional<DisjointFailureDirection> direction_failed;
  std::optional<RVector> witness;  // upper bound of one set but not the other
  EqualityVerdict detail;
};

DisjointnessVerdict is_disjoint(const ConeSpace& K, const RVector& x, const RVector& y);

// Thrown when an operation requiring positive inputs is handed a vector
// outside X+.
struct PositivityError : std::invalid_argument {
  PositivityError(std::string which_input, RVector v, std::size_t row)
      : std::invalid_argument("vector '" + which_input + "' is not in the positive cone"),
        which(std::move(which_input)), vector(std::move(v)), violated_row(row) {}
  std::string which;
  RVector vector;
  std::size_t violated_row;
};

// For 0 <= x, y: is inf{x, y} = 0? Decided by checking that the lower-bound
// polyhedron of {x, y} is contained in -X+ (0 is a lower bound already).
struct InfimumZeroVerdict {
  bool zero_infimum;
  std::optional<RVector> witness;  // a common lower bound f with f <= 0 false
  SubsetVerdict detail;
};

InfimumZeroVerdict is_infimum_zero(const ConeSpace& K, const RVector& x, const RVector& y);

// Independent route to the same question: enumerate the vertices and
// recession rays of the lower-bound polyhedron (double description on its
// homogenization) and test each against -X+. Exists purely as a
// cross-check; shares no code path with the LP route.
InfimumZeroVerdict is_infimum_zero_by_enumeration(const ConeSpace& K, const RVector& x,
                                                  const RVector& y);

// Is g the greatest lower bound of {x, y}?
struct InfimumVerdict {
  bool is_infimum;
  bool is_lower_bound;             // g <= x and g <= y
  std::optional<RVector> witness;  // lower bound not dominated by g
  SubsetVerdict detail;
};

InfimumVerdict verify_infimum(const ConeSpace& K, const RVector& g, const RVector& x,
                              const RVector& y);

// Closed-form infimum for simplicial cones: componentwise minimum in cone
// coordinates. Rejects non-simplicial cones.
RVector infimum_simplicial(const ConeSpace& K, const RVector& x, const RVector& y);

// x disjoint to every generator, hence (disjoint complements being
// subspaces here) to all of span(gens). Empty gens: vacuously true.
struct SpanDisjointnessVerdict {
  bool disjoint;
  std::optional<std::size_t> failing_generator;
  std::optional<DisjointnessVerdict> failure;
};

SpanDisjointnessVerdict is_disjoint_to_span(const ConeSpace& K, const RVector& x,
                                            std::span<const RVector> gens);

}  // namespace ordercone
