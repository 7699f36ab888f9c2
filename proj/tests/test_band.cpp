#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ordercone/band.hpp"
#include "ordercone/certcheck.hpp"
#include "ordercone/genlab.hpp"
#include "ordercone/json_io.hpp"
#include "ordercone/linalg.hpp"
#include "ordercone/lp.hpp"
#include "ordercone/rng.hpp"

using namespace ordercone;

namespace {

ConeSpace orthant(std::size_t n) {
  return ConeSpace::from_halfspaces(RMatrix::identity(n));
}

ConeSpace l1_cone() { return ConeSpace::from_generators(l1_generators(2)); }

RMatrix diag(std::initializer_list<int> entries) {
  RMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (int e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

bool in_conic_hull(const std::vector<RVector>& gens, const RVector& z) {
  if (gens.empty()) return z.is_zero();
  const std::size_t k = gens.size(), n = z.dim();
  RMatrix a(2 * n + k, k);
  RVector b(2 * n + k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a(i, j) = gens[j][i];
      a(n + i, j) = -gens[j][i];
    }
    b[i] = z[i];
    b[n + i] = -z[i];
  }
  for (std::size_t j = 0; j < k; ++j) a(2 * n + j, j) = 1;
  return is_feasible(a, b).feasible;
}

}  // namespace

TEST_CASE("ProjectionMatrix enforces idempotence") {
  CHECK_THROWS_AS(ProjectionMatrix(RMatrix{{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ProjectionMatrix(RMatrix{{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_NOTHROW(ProjectionMatrix(RMatrix{{1, 1}, {0, 0}}));
}

TEST_CASE("is_positive_operator") {
  const ConeSpace o2 = orthant(2);
  CHECK(is_positive_operator(o2, diag({1, 0})).positive);
  CHECK(is_positive_operator(o2, RMatrix{{1, 1}, {0, 0}}).positive);

  const ConeSpace l1 = l1_cone();
  const auto v = is_positive_operator(l1, diag({1, 0, 0}));
  REQUIRE_FALSE(v.positive);
  // witness: some generator maps to (+-1, 0, 0), outside the cone
  const RVector g = l1.generators()[*v.generator_index];
  CHECK(*v.image == diag({1, 0, 0}) * g);
  CHECK(dot(l1.halfspaces().row(*v.violated_row), *v.image) < 0);
}

TEST_CASE("is_order_projection") {
  const ConeSpace o2 = orthant(2);
  CHECK(is_order_projection(o2, ProjectionMatrix(diag({1, 0}))).order_projection);

  const auto skew = is_order_projection(o2, ProjectionMatrix(RMatrix{{1, 1}, {0, 0}}));
  REQUIRE_FALSE(skew.order_projection);
  CHECK(skew.projection_positive.positive);
  CHECK_FALSE(skew.complement_positive.positive);
  CHECK(skew.renderings_agree);

  const ConeSpace l1 = l1_cone();
  const auto coord = is_order_projection(l1, ProjectionMatrix(diag({0, 0, 1})));
  REQUIRE_FALSE(coord.order_projection);
  CHECK(coord.projection_positive.positive);
  CHECK_FALSE(coord.complement_positive.positive);
}

TEST_CASE("certify_projection_band on the orthant block projection") {
  const ConeSpace o3 = orthant(3);
  const BandCertificate cert =
      certify_projection_band(o3, ProjectionMatrix(diag({1, 1, 0})), 16, 7);
  CHECK(cert.valid());
  CHECK(cert.range_pos_gens ==
        std::vector<RVector>{RVector{0, 1, 0}, RVector{1, 0, 0}});
  CHECK(cert.kernel_pos_gens == std::vector<RVector>{RVector{0, 0, 1}});
  CHECK(cert.probe_records.size() == 16);
}

TEST_CASE("identity projection: kernel {0}, vacuous cross checks") {
  const ConeSpace l1 = l1_cone();
  const BandCertificate cert =
      certify_projection_band(l1, ProjectionMatrix(RMatrix::identity(3)), 8, 3);
  CHECK(cert.valid());
  CHECK(cert.kernel_basis.empty());
  CHECK(cert.kernel_pos_gens.empty());
  CHECK(cert.cross_pairs.empty());
  CHECK(cert.probe_records.empty());  // no nonzero kernel part exists
}

TEST_CASE("conjugated block projection on a direct-sum cone in dim 4") {
  const InstanceSpec inst = gen_direct_sum(2, 2, 42);
  REQUIRE(inst.projection.has_value());
  const BandCertificate cert = certify_projection_band(inst.cone, *inst.projection, 12, 99);
  CHECK(cert.valid());
  // generator-level re-check of every stored witness, solver-free
  const auto rep = certcheck::recheck_band_certificate(to_json(cert));
  if (!rep.ok) CAPTURE(rep.problems.front());
  CHECK(rep.ok);
}

TEST_CASE("negative control: positive projection with non-positive complement") {
  const ConeSpace l1 = l1_cone();
  const BandCertificate cert = certify_projection_band(l1, ProjectionMatrix(diag({0, 0, 1})));
  CHECK_FALSE(cert.valid());
  CHECK(cert.order_projection.executed);
  CHECK_FALSE(cert.order_projection.ok);
  const auto failed = cert.failed_check_names();
  CHECK(std::find(failed.begin(), failed.end(), "order_projection") != failed.end());
  // the invalid certificate still rechecks (witness is verified)
  CHECK(certcheck::recheck_band_certificate(to_json(cert)).ok);
  // and certification is symmetric in the complement: I - P fails too
  const BandCertificate comp =
      certify_projection_band(l1, ProjectionMatrix(diag({1, 1, 0})));
  CHECK_FALSE(comp.valid());
}

TEST_CASE("decompose_positive") {
  const ConeSpace o2 = orthant(2);
  const ProjectionMatrix p(diag({1, 0}));
  SUBCASE("componentwise split on the orthant") {
    const auto [a, b] = decompose_positive(o2, p, RVector{2, 3});
    CHECK(a == RVector{2, 0});
    CHECK(b == RVector{0, 3});
  }
  SUBCASE("zero splits as zero") {
    const auto [a, b] = decompose_positive(o2, p, RVector(2));
    CHECK(a.is_zero());
    CHECK(b.is_zero());
  }
  SUBCASE("x outside the cone is rejected") {
    CHECK_THROWS_AS((void)decompose_positive(o2, p, RVector{-1, 0}), PositivityError);
  }
  SUBCASE("non order projection is rejected") {
    CHECK_THROWS_AS(
        (void)decompose_positive(o2, ProjectionMatrix(RMatrix{{1, 1}, {0, 0}}), RVector{1, 1}),
        std::invalid_argument);
  }
  SUBCASE("seeded direct-sum decompositions are positive and disjoint") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const InstanceSpec inst = gen_direct_sum(2, 2, seed);
      const RVector x = gen_positive_vector(inst.cone, seed + 1);
      const auto [a, b] = decompose_positive(inst.cone, *inst.projection, x);
      CHECK(a + b == x);
      CHECK(contains(inst.cone, a).holds);
      CHECK(contains(inst.cone, b).holds);
      CHECK(is_disjoint(inst.cone, a, b).disjoint);
    }
  }
}

TEST_CASE("check_sum_decomposition") {
  const ConeSpace o2 = orthant(2);
  SUBCASE("hypothesis and conclusion both hold") {
    const auto v = check_sum_decomposition(o2, RVector{1, 1}, RVector{1, 0}, RVector{0, 1});
    CHECK(v.hypothesis);
    CHECK(v.conclusion);
    CHECK(v.holds);
  }
  SUBCASE("x not positive: implication vacuous") {
    const auto v = check_sum_decomposition(o2, RVector{1, -1}, RVector{1, 0}, RVector{0, -1});
    CHECK_FALSE(v.hypothesis);
    CHECK(v.holds);
  }
  SUBCASE("l1 cone: disjoint decomposition of (0,0,2)") {
    const ConeSpace l1 = l1_cone();
    const auto v = check_sum_decomposition(l1, RVector{0, 0, 2}, RVector{1, 0, 1},
                                           RVector{-1, 0, 1});
    CHECK(v.hypothesis);  // x >= 0 and the parts are disjoint
    CHECK(v.conclusion);
    CHECK(v.holds);
  }
  SUBCASE("x != y + z is rejected") {
    CHECK_THROWS_AS(
        (void)check_sum_decomposition(o2, RVector{1, 1}, RVector{1, 0}, RVector{1, 1}),
        std::invalid_argument);
  }
}

TEST_CASE("uniqueness_check") {
  const ConeSpace o2 = orthant(2);
  const ProjectionMatrix p(diag({1, 0}));
  SUBCASE("identical projections") {
    const auto v = uniqueness_check(o2, p, p);
    CHECK(v.applicable);
    CHECK(v.holds);
  }
  SUBCASE("skew companion is not an order projection: vacuous") {
    const ProjectionMatrix q(RMatrix{{1, 1}, {0, 0}});
    const auto v = uniqueness_check(o2, p, q);
    CHECK_FALSE(v.q_order_projection);
    CHECK(v.same_range);
    CHECK_FALSE(v.applicable);
    CHECK(v.holds);
  }
  SUBCASE("alternative complements on direct-sum cones never beat the kernel") {
    std::size_t hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const InstanceSpec inst = gen_direct_sum(2, 1 + seed % 2, seed + 21);
      const ConeSpace& k = inst.cone;
      const ProjectionMatrix& p0 = *inst.projection;
      const auto range = column_space_basis(p0.matrix());
      const auto kernel = kernel_basis(p0.matrix());
      RationalSampler s(seed ^ 0xfeedface);
      for (int alt = 0; alt < 8; ++alt) {
        // complement candidate: kernel basis shifted into the range
        std::vector<RVector> w;
        for (const auto& kv : kernel) {
          RVector shifted = kv;
          for (const auto& rv : range)
            shifted += (alt == 0 ? Rational(0) : s.draw()) * rv;
          w.push_back(shifted);
        }
        std::vector<RVector> all = range;
        all.insert(all.end(), w.begin(), w.end());
        if (rank_of_vectors(all) != k.dim()) continue;
        // projection onto range along span(w)
        RMatrix b(k.dim(), k.dim());
        for (std::size_t j = 0; j < all.size(); ++j)
          for (std::size_t i = 0; i < k.dim(); ++i) b(i, j) = all[j][i];
        RMatrix d(k.dim(), k.dim());
        for (std::size_t j = 0; j < range.size(); ++j) d(j, j) = 1;
        const ProjectionMatrix alt_p(b * d * *inverse(b));
        const auto v = uniqueness_check(k, p0, alt_p);
        CHECK(v.holds);
        if (v.applicable) {
          CHECK(alt_p == p0);
          ++hits;
        }
      }
    }
    CHECK(hits > 0);  // the alt = 0 candidate reproduces the kernel
  }
}

TEST_CASE("corollary_check") {
  SUBCASE("orthant: coordinate plane plus axis") {
    const ConeSpace o3 = orthant(3);
    const std::vector<RVector> v{RVector{1, 0, 0}, RVector{0, 1, 0}};
    const std::vector<RVector> w{RVector{0, 0, 1}};
    const auto res = corollary_check(o3, v, w, 8, 1);
    CHECK(res.ok());
    CHECK(res.used_positive_spanning);
  }
  SUBCASE("diagonal split of the orthant fails the disjointness precheck") {
    const ConeSpace o2 = orthant(2);
    const std::vector<RVector> v{RVector{1, 1}};
    const std::vector<RVector> w{RVector{1, -1}};
    const auto res = corollary_check(o2, v, w, 8, 1);
    CHECK_FALSE(res.ok());
    CHECK_FALSE(res.disjointness_ok);
    CHECK(*res.failing_w == 0);
    REQUIRE(res.disjoint_failure.has_value());
    CHECK_FALSE(res.disjoint_failure->disjoint);
    CHECK(res.disjoint_failure->witness.has_value());
  }
  SUBCASE("V = X, W = {}: the trivial band") {
    const ConeSpace o2 = orthant(2);
    const std::vector<RVector> v{RVector{1, 0}, RVector{0, 1}};
    const auto res = corollary_check(o2, v, std::vector<RVector>{}, 8, 1);
    CHECK(res.ok());
    CHECK(res.certificate->kernel_basis.empty());
  }
  SUBCASE("non-basis inputs are rejected with the rank defect") {
    const ConeSpace o2 = orthant(2);
    const std::vector<RVector> v{RVector{1, 0}};
    const std::vector<RVector> w{RVector{2, 0}};
    CHECK_THROWS_AS((void)corollary_check(o2, v, w, 8, 1), std::invalid_argument);
  }
}

TEST_CASE("theorem, both directions, across generated order projections") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    SplitMix64 shape(seed * 7 + 100);
    const std::size_t n1 = 1 + shape.below(3);
    const std::size_t n2 = 1 + shape.below(2);
    const InstanceSpec inst = gen_direct_sum(n1, n2, seed);
    const ConeSpace& k = inst.cone;
    const ProjectionMatrix& p = *inst.projection;

    // converse: the order projection certifies as a band projection
    const BandCertificate cert = certify_projection_band(k, p, 6, seed);
    CHECK(cert.valid());

    // forward: the projection rebuilt from the certified decomposition is
    // an order projection
    std::vector<RVector> all = cert.range_basis;
    all.insert(all.end(), cert.kernel_basis.begin(), cert.kernel_basis.end());
    RMatrix b(k.dim(), k.dim());
    for (std::size_t j = 0; j < all.size(); ++j)
      for (std::size_t i = 0; i < k.dim(); ++i) b(i, j) = all[j][i];
    RMatrix d(k.dim(), k.dim());
    for (std::size_t j = 0; j < cert.range_basis.size(); ++j) d(j, j) = 1;
    const ProjectionMatrix rebuilt(b * d * *inverse(b));
    CHECK(rebuilt == p);  // same range, same kernel: the same projection
    CHECK(is_order_projection(k, rebuilt).order_projection);

    // complement symmetry: the certificate story holds for I - P too
    const BandCertificate comp =
        certify_projection_band(k, ProjectionMatrix(p.complement_matrix()), 6, seed + 1);
    CHECK(comp.valid());

    // range positive cone identity: P applied to the cone generators spans
    // the same cone as the computed positive generators of the range
    std::vector<RVector> images;
    for (const auto& g : k.generators()) {
      const RVector pg = p.matrix() * g;
      if (!pg.is_zero()) images.push_back(pg);
    }
    for (const auto& g : cert.range_pos_gens) CHECK(in_conic_hull(images, g));
    for (const auto& img : images) CHECK(in_conic_hull(cert.range_pos_gens, img));
  }
}
