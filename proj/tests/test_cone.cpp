#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordercone/cone.hpp"
#include "ordercone/genlab.hpp"
#include "ordercone/json_io.hpp"
#include "ordercone/linalg.hpp"
#include "ordercone/rng.hpp"

using namespace ordercone;

namespace {

ConeSpace orthant(std::size_t n) {
  return ConeSpace::from_halfspaces(RMatrix::identity(n));
}

ConeSpace l1_cone() { return ConeSpace::from_generators(l1_generators(2)); }

}  // namespace

TEST_CASE("construction certifies pointed and generating") {
  const ConeSpace k = l1_cone();
  CHECK(k.dim() == 3);
  CHECK(k.pointed());
  CHECK(k.generating());
  CHECK(k.generators().size() == 4);
  CHECK(k.halfspaces().rows() == 4);
  for (const auto& g : k.generators()) CHECK(contains(k, g).holds);
}

TEST_CASE("a cone with a line is rejected with a lineality witness") {
  try {
    (void)ConeSpace::from_generators({RVector{1, 0}, RVector{-1, 0}, RVector{0, 1}});
    FAIL("expected ConeError");
  } catch (const ConeError& e) {
    CHECK(e.kind == ConeError::Kind::not_pointed);
    REQUIRE(e.witness.has_value());
    // both the witness and its negation lie in the cone
    CHECK_FALSE(e.witness->is_zero());
    CHECK((*e.witness)[1] == 0);
  }
}

TEST_CASE("a non-spanning generator set is rejected with a functional witness") {
  try {
    (void)ConeSpace::from_generators({RVector{1, 1}});
    FAIL("expected ConeError");
  } catch (const ConeError& e) {
    CHECK(e.kind == ConeError::Kind::not_generating);
    REQUIRE(e.witness.has_value());
    CHECK(dot(*e.witness, RVector{1, 1}) == 0);
    CHECK_FALSE(e.witness->is_zero());
  }
}

TEST_CASE("contains") {
  const ConeSpace o2 = orthant(2);
  CHECK(contains(o2, RVector{1, 0}).holds);
  const ConeSpace l1 = l1_cone();
  CHECK(contains(l1, RVector{1, 0, 1}).holds);
  const auto v = contains(l1, RVector{1, 0, 0});
  CHECK_FALSE(v.holds);
  REQUIRE(v.violated_row.has_value());
  CHECK(dot(l1.halfspaces().row(*v.violated_row), RVector{1, 0, 0}) < 0);
}

TEST_CASE("leq") {
  const ConeSpace o2 = orthant(2);
  CHECK(leq(o2, RVector{0, 0}, RVector{1, 2}).holds);
  CHECK_FALSE(leq(o2, RVector{1, 0}, RVector{0, 1}).holds);  // incomparable
  const ConeSpace l1 = l1_cone();
  CHECK(leq(l1, RVector{0, 0, 0}, RVector{Rational(1, 2), Rational(1, 2), 1}).holds);
}

TEST_CASE("is_bounded_multiple") {
  const ConeSpace o2 = orthant(2);
  CHECK(is_bounded_multiple(o2, RVector{-1, 0}, RVector{0, 0}));
  CHECK_FALSE(is_bounded_multiple(o2, RVector{1, -1}, RVector{5, 5}));
  CHECK(is_bounded_multiple(o2, RVector{0, 0}, RVector{2, 3}));
}

TEST_CASE("subspace_cone_generators") {
  const ConeSpace o3 = orthant(3);
  const std::vector<RVector> e12{RVector{1, 0, 0}, RVector{0, 1, 0}};
  const auto rays = subspace_cone_generators(o3, e12);
  CHECK(rays == std::vector<RVector>{RVector{0, 1, 0}, RVector{1, 0, 0}});

  const ConeSpace l1 = l1_cone();
  // the plane z3 = 0 meets the cone only at 0
  const std::vector<RVector> plane{RVector{1, 0, 0}, RVector{0, 1, 0}};
  CHECK(subspace_cone_generators(l1, plane).empty());

  // the span of a generator meets the cone in exactly that ray
  const std::vector<RVector> ray{RVector{1, 0, 1}};
  const auto r = subspace_cone_generators(l1, ray);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == RVector{1, 0, 1});
  CHECK(contains(l1, r[0]).holds);
}

TEST_CASE("subspace_cone_generators rejects dependent bases") {
  const ConeSpace o2 = orthant(2);
  const std::vector<RVector> dep{RVector{1, 0}, RVector{2, 0}};
  CHECK_THROWS_AS((void)subspace_cone_generators(o2, dep), std::invalid_argument);
}

TEST_CASE("the induced relation is a partial order") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const InstanceSpec inst =
        seed % 3 == 0 ? gen_l1_cone(2 + seed % 2) : gen_simplicial(2 + seed % 3, seed);
    const ConeSpace& k = inst.cone;
    for (std::uint64_t t = 0; t < 8; ++t) {
      const RVector x = gen_vector(k, seed * 100 + t);
      const RVector y = gen_vector(k, seed * 100 + t + 51);
      const RVector z = gen_vector(k, seed * 100 + t + 97);
      const RVector w = gen_vector(k, seed * 100 + t + 131);
      CHECK(leq(k, x, x).holds);  // reflexive
      if (leq(k, x, y).holds && leq(k, y, z).holds) CHECK(leq(k, x, z).holds);
      if (leq(k, x, y).holds && leq(k, y, x).holds) CHECK(x == y);  // antisymmetric
      // translation invariance
      CHECK(leq(k, x, y).holds == leq(k, x + w, y + w).holds);
    }
  }
}

TEST_CASE("bounded multiples force x <= 0 (Archimedean probe)") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const InstanceSpec inst = gen_simplicial(3, seed + 7);
    const ConeSpace& k = inst.cone;
    for (std::uint64_t t = 0; t < 20; ++t) {
      const RVector x = gen_vector(k, seed * 977 + t);
      const RVector y = gen_vector(k, seed * 977 + t + 41);
      if (is_bounded_multiple(k, x, y)) {
        CHECK(leq(k, x, RVector(k.dim())).holds);
        // and the hypothesis really holds for several n
        for (int n = 1; n <= 4; ++n) CHECK(leq(k, Rational(n) * x, y).holds);
      }
    }
  }
}

TEST_CASE("representation agreement on sampled points") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const InstanceSpec inst = gen_random_cone(3, 5, seed);
    const ConeSpace& k = inst.cone;
    RationalSampler s(seed ^ 0xfeed);
    for (int t = 0; t < 250; ++t) {
      RVector z(k.dim());
      for (std::size_t j = 0; j < k.dim(); ++j) z[j] = s.draw();
      // H-rep membership
      const bool h = contains(k, z).holds;
      // V-rep membership: z is a nonnegative combination of the generators
      RVector residual = z;
      // solve via LP feasibility in combination space
      const auto& gens = k.generators();
      RMatrix a(2 * k.dim() + gens.size(), gens.size());
      RVector b(2 * k.dim() + gens.size());
      for (std::size_t i = 0; i < k.dim(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          a(i, j) = gens[j][i];
          a(k.dim() + i, j) = -gens[j][i];
        }
        b[i] = residual[i];
        b[k.dim() + i] = -residual[i];
      }
      for (std::size_t j = 0; j < gens.size(); ++j) a(2 * k.dim() + j, j) = 1;
      CHECK(h == is_feasible(a, b).feasible);
    }
  }
}

TEST_CASE("cone JSON round trip and representation validation") {
  const ConeSpace k = l1_cone();
  const Json j = to_json(k);
  const ConeSpace back = cone_from_json(j);
  CHECK(back == k);
  CHECK(canonical_dump(to_json(back)) == canonical_dump(j));

  Json corrupted = j;
  corrupted["halfspaces"] = to_json(RMatrix::identity(3));
  CHECK_THROWS_AS((void)cone_from_json(corrupted), ConeError);

  Json without = j;
  without.erase("halfspaces");
  CHECK(cone_from_json(without) == k);
}
