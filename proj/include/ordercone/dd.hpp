// Double description method for polyhedral cones: converts between the
// halfspace form {z : A z >= 0} and the generator form cone(r1, ..., rk).
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ordercone/rational.hpp"

namespace ordercone {

// Minimal generator description of {z : A z >= 0}:
// the cone equals span(lineality) + cone(rays), with `rays` the extreme
// rays of the pointed quotient. Rays are coprime-integer normalized and
// sorted; lineality vectors are additionally sign-canonical.
struct DDResult {
  std::vector<RVector> rays;
  std::vector<RVector> lineality;

  bool pointed() const { return lineality.empty(); }
};

DDResult dd_rays(const RMatrix& A);

struct NotPointedError : std::invalid_argument {
  explicit NotPointedError(RVector witness)
      : std::invalid_argument("cone is not pointed"), lineality_witness(std::move(witness)) {}
  RVector lineality_witness;  // v != 0 with both v and -v in the cone
};

// Extreme rays of a pointed cone given in halfspace form. Throws
// NotPointedError (carrying a lineality vector) otherwise.
std::vector<RVector> hrep_to_vrep(const RMatrix& A);

// Minimal halfspace description of cone(generators): facet rows, plus a
// +/- row pair per missing dimension when the generators do not span.
RMatrix vrep_to_hrep(std::span<const RVector> generators);

}  // namespace ordercone
