// Seeded, reproducible generation of cones, vectors and projections across
// the lattice (simplicial), decomposable (direct sum), non-lattice (l1) and
// unstructured (random rays) regimes. Regenerating from (kind, params,
// seed) reproduces the payload bit-exactly.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordercone/band.hpp"
#include "ordercone/cone.hpp"
#include "ordercone/rational.hpp"

namespace ordercone {

struct InstanceSpec {
  std::string kind;  // "simplicial" | "direct_sum" | "l1" | "random_rays"
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
  ConeSpace cone;
  std::optional<ProjectionMatrix> projection;
  std::vector<RVector> vectors;
};

// Entry bounds for seeded rational draws. The defaults keep LP pivot
// growth manageable while still exercising non-integer data.
struct SamplerBounds {
  std::int64_t num_lo = -9;
  std::int64_t num_hi = 9;
  std::int64_t den_max = 3;
};

// Image of the standard orthant under a seeded invertible rational matrix;
// the induced order is a lattice with a componentwise closed form.
InstanceSpec gen_simplicial(std::size_t n, std::uint64_t seed, SamplerBounds bounds = {});

// (cone1 in the first block) + (cone2 in the second block), conjugated by a
// seeded invertible basis change T. The payload carries the conjugated
// block projection, an order projection by construction.
InstanceSpec gen_direct_sum(std::size_t n1, std::size_t n2, std::uint64_t seed,
                            SamplerBounds bounds = {});

// Composition helper behind gen_direct_sum, exposed so tests can pin T.
InstanceSpec direct_sum_instance(std::span<const RVector> block1_gens,
                                 std::span<const RVector> block2_gens, const RMatrix& T,
                                 std::uint64_t seed);

// The cone over the l1 ball: generators (+-e_i, 1) in dimension m + 1.
// Pointed and generating but not a lattice cone for m >= 2.
InstanceSpec gen_l1_cone(std::size_t m);

// k seeded rational rays, resampled until pointed and generating.
InstanceSpec gen_random_cone(std::size_t n, std::size_t k, std::uint64_t seed,
                             SamplerBounds bounds = {});

// Seeded nonnegative rational combination of the generators: in X+ by
// construction.
RVector gen_positive_vector(const ConeSpace& K, std::uint64_t seed);

// Difference of two positive draws; reaches all of X since X+ generates.
RVector gen_vector(const ConeSpace& K, std::uint64_t seed);

// Generators of the l1 cone in dimension m + 1 without the InstanceSpec
// wrapper (used as a direct-sum building block).
std::vector<RVector> l1_generators(std::size_t m);

}  // namespace ordercone
