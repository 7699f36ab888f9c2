#include "ordercone/genlab.hpp"

#include <stdexcept>

#include "ordercone/linalg.hpp"
#include "ordercone/rng.hpp"

namespace ordercone {

namespace {

constexpr int kRetryBudget = 64;

RationalSampler make_sampler(std::uint64_t seed, const SamplerBounds& bounds) {
  RationalSampler s(seed);
  s.num_lo = bounds.num_lo;
  s.num_hi = bounds.num_hi;
  s.den_max = bounds.den_max;
  return s;
}

void record_bounds(std::map<std::string, std::int64_t>& params, const SamplerBounds& b) {
  params["num_lo"] = b.num_lo;
  params["num_hi"] = b.num_hi;
  params["den_max"] = b.den_max;
}

[[noreturn]] void budget_exhausted(const char* what) {
  throw std::runtime_error(std::string("genlab: retry budget (") +
                           std::to_string(kRetryBudget) + ") exhausted while sampling " + what);
}

RMatrix draw_invertible(std::size_t n, RationalSampler& sampler) {
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = sampler.draw();
    if (determinant(m) != 0) return m;
  }
  budget_exhausted("an invertible matrix");
}

std::vector<RVector> orthant_generators(std::size_t n) {
  std::vector<RVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RVector e(n);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return gens;
}

// A pointed generating cone for one block of a direct sum.
std::vector<RVector> draw_block_generators(std::size_t n, RationalSampler& sampler) {
  if (n == 1) return orthant_generators(1);
  switch (sampler.rng.below(3)) {
    case 0:
      return orthant_generators(n);
    case 1: {
      const RMatrix m = draw_invertible(n, sampler);
      std::vector<RVector> gens;
      for (std::size_t j = 0; j < n; ++j) gens.push_back(m.col(j));
      return gens;
    }
    default:
      if (n >= 3) return l1_generators(n - 1);
      return orthant_generators(n);
  }
}

}  // namespace

std::vector<RVector> l1_generators(std::size_t m) {
  std::vector<RVector> gens;
  for (std::size_t i = 0; i < m; ++i) {
    for (int sign : {+1, -1}) {
      RVector g(m + 1);
      g[i] = sign;
      g[m] = 1;
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

InstanceSpec gen_simplicial(std::size_t n, std::uint64_t seed, SamplerBounds bounds) {
  if (n < 1) throw std::invalid_argument("gen_simplicial: n must be >= 1");
  RationalSampler sampler = make_sampler(seed ^ 0xa1c9e4ddb0f1f823ULL, bounds);
  const RMatrix m = draw_invertible(n, sampler);
  std::vector<RVector> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back(m.col(j));
  std::map<std::string, std::int64_t> params{{"n", static_cast<std::int64_t>(n)}};
  record_bounds(params, bounds);
  return InstanceSpec{.kind = "simplicial",
                      .params = std::move(params),
                      .seed = seed,
                      .cone = ConeSpace::from_generators(std::move(gens)),
                      .projection = std::nullopt,
                      .vectors = {}};
}

InstanceSpec direct_sum_instance(std::span<const RVector> block1_gens,
                                 std::span<const RVector> block2_gens, const RMatrix& T,
                                 std::uint64_t seed) {
  const std::size_t n1 = block1_gens.front().dim();
  const std::size_t n2 = block2_gens.front().dim();
  const std::size_t n = n1 + n2;
  if (T.rows() != n || T.cols() != n)
    throw std::invalid_argument("direct_sum_instance: T has wrong shape");
  const auto t_inv = inverse(T);
  if (!t_inv) throw std::invalid_argument("direct_sum_instance: T not invertible");

  std::vector<RVector> gens;
  for (const auto& g : block1_gens) {
    RVector e(n);
    for (std::size_t i = 0; i < n1; ++i) e[i] = g[i];
    gens.push_back(T * e);
  }
  for (const auto& g : block2_gens) {
    RVector e(n);
    for (std::size_t i = 0; i < n2; ++i) e[n1 + i] = g[i];
    gens.push_back(T * e);
  }

  RMatrix block(n, n);
  for (std::size_t i = 0; i < n1; ++i) block(i, i) = 1;
  ProjectionMatrix projection(T * block * *t_inv);

  return InstanceSpec{.kind = "direct_sum",
                      .params = {{"n1", static_cast<std::int64_t>(n1)},
                                 {"n2", static_cast<std::int64_t>(n2)}},
                      .seed = seed,
                      .cone = ConeSpace::from_generators(std::move(gens)),
                      .projection = std::move(projection),
                      .vectors = {}};
}

InstanceSpec gen_direct_sum(std::size_t n1, std::size_t n2, std::uint64_t seed,
                            SamplerBounds bounds) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("gen_direct_sum: blocks must be >= 1");
  RationalSampler sampler = make_sampler(seed ^ 0x517cc1b727220a95ULL, bounds);
  const auto gens1 = draw_block_generators(n1, sampler);
  const auto gens2 = draw_block_generators(n2, sampler);
  const RMatrix t = draw_invertible(n1 + n2, sampler);
  InstanceSpec inst = direct_sum_instance(gens1, gens2, t, seed);
  record_bounds(inst.params, bounds);
  return inst;
}

InstanceSpec gen_l1_cone(std::size_t m) {
  if (m < 2) throw std::invalid_argument("gen_l1_cone: m must be >= 2");
  return InstanceSpec{.kind = "l1",
                      .params = {{"m", static_cast<std::int64_t>(m)}},
                      .seed = 0,
                      .cone = ConeSpace::from_generators(l1_generators(m)),
                      .projection = std::nullopt,
                      .vectors = {}};
}

InstanceSpec gen_random_cone(std::size_t n, std::size_t k, std::uint64_t seed,
                             SamplerBounds bounds) {
  if (n < 2 || k < n) throw std::invalid_argument("gen_random_cone: need k >= n >= 2");
  RationalSampler sampler = make_sampler(seed ^ 0x2545f4914f6cdd1dULL, bounds);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<RVector> rays;
    for (std::size_t r = 0; r < k; ++r) {
      RVector v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = sampler.draw();
      if (!v.is_zero()) rays.push_back(std::move(v));
    }
    if (rays.empty()) continue;
    try {
      std::map<std::string, std::int64_t> params{{"n", static_cast<std::int64_t>(n)},
                                                 {"k", static_cast<std::int64_t>(k)}};
      record_bounds(params, bounds);
      return InstanceSpec{.kind = "random_rays",
                          .params = std::move(params),
                          .seed = seed,
                          .cone = ConeSpace::from_generators(std::move(rays)),
                          .projection = std::nullopt,
                          .vectors = {}};
    } catch (const ConeError&) {
      // not pointed or not generating: resample
    }
  }
  budget_exhausted("a pointed generating cone");
}

RVector gen_positive_vector(const ConeSpace& K, std::uint64_t seed) {
  RationalSampler sampler(seed ^ 0x9e3779b97f4a7c15ULL);
  RVector x(K.dim());
  for (const auto& g : K.generators()) x += sampler.draw_nonneg() * g;
  return x;
}

RVector gen_vector(const ConeSpace& K, std::uint64_t seed) {
  RationalSampler sampler(seed ^ 0xd1b54a32d192ed03ULL);
  RVector x(K.dim());
  for (const auto& g : K.generators()) x += sampler.draw_nonneg() * g;
  for (const auto& g : K.generators()) x -= sampler.draw_nonneg() * g;
  return x;
}

}  // namespace ordercone
