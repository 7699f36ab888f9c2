#include "ordercone/band.hpp"

#include <cassert>

#include "ordercone/linalg.hpp"
#include "ordercone/rng.hpp"

namespace ordercone {

ProjectionMatrix::ProjectionMatrix(RMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("ProjectionMatrix: not square");
  if (m_ * m_ != m_) throw std::invalid_argument("ProjectionMatrix: not idempotent");
}

RMatrix ProjectionMatrix::complement_matrix() const {
  return RMatrix::identity(m_.rows()) - m_;
}

PositivityVerdict is_positive_operator(const ConeSpace& K, const RMatrix& M) {
  if (M.rows() != K.dim() || M.cols() != K.dim())
    throw std::invalid_argument("is_positive_operator: dimension mismatch");
  // A positive combination of generators maps to the same combination of
  // images, so checking the generators decides the whole cone.
  const auto& gens = K.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const RVector image = M * gens[i];
    if (auto v = contains(K, image); !v.holds)
      return {false, i, image, v.violated_row};
  }
  return {true, std::nullopt, std::nullopt, std::nullopt};
}

OrderProjectionVerdict is_order_projection(const ConeSpace& K, const ProjectionMatrix& P) {
  OrderProjectionVerdict out;
  out.projection_positive = is_positive_operator(K, P.matrix());
  out.complement_positive = is_positive_operator(K, P.complement_matrix());
  const bool operator_rendering = out.projection_positive.positive &&
                                  out.complement_positive.positive;

  // Second rendering: 0 <= Pg <= g for every generator g.
  bool sandwich = true;
  for (const auto& g : K.generators()) {
    const RVector pg = P.matrix() * g;
    if (!contains(K, pg).holds || !leq(K, pg, g).holds) {
      sandwich = false;
      break;
    }
  }
  out.renderings_agree = (operator_rendering == sandwich);
  assert(out.renderings_agree);
  out.order_projection = operator_rendering && out.renderings_agree;
  return out;
}

bool BandCertificate::valid() const {
  for (const Check* c : {&order_projection, &basis_decomposition, &directedness_range,
                         &directedness_kernel, &cross_disjointness, &falsification_probes})
    if (!c->executed || !c->ok) return false;
  return true;
}

std::vector<std::string> BandCertificate::failed_check_names() const {
  std::vector<std::string> names;
  const std::pair<const Check*, const char*> all[] = {
      {&order_projection, "order_projection"},
      {&basis_decomposition, "basis_decomposition"},
      {&directedness_range, "directedness_range"},
      {&directedness_kernel, "directedness_kernel"},
      {&cross_disjointness, "cross_disjointness"},
      {&falsification_probes, "falsification_probes"},
  };
  for (const auto& [c, name] : all)
    if (!c->executed || !c->ok) names.push_back(name);
  return names;
}

BandCertificate certify_projection_band(const ConeSpace& K, const ProjectionMatrix& P,
                                        std::size_t probes, std::uint64_t seed) {
  if (P.dim() != K.dim())
    throw std::invalid_argument("certify_projection_band: dimension mismatch");
  BandCertificate cert(K, P, seed, probes);

  // (1) order projection
  cert.order_projection_detail = is_order_projection(K, P);
  cert.order_projection = {true, cert.order_projection_detail.order_projection};
  if (!cert.order_projection.ok) return cert;

  // (2) range and kernel bases
  cert.range_basis = column_space_basis(P.matrix());
  cert.kernel_basis = kernel_basis(P.matrix());
  std::vector<RVector> combined = cert.range_basis;
  combined.insert(combined.end(), cert.kernel_basis.begin(), cert.kernel_basis.end());
  cert.basis_decomposition = {
      true, cert.range_basis.size() + cert.kernel_basis.size() == K.dim() &&
                rank_of_vectors(combined) == K.dim()};
  if (!cert.basis_decomposition.ok) return cert;

  // (3)+(4) positive generators span their subspaces (directedness)
  cert.range_pos_gens = subspace_cone_generators(K, cert.range_basis);
  cert.kernel_pos_gens = subspace_cone_generators(K, cert.kernel_basis);
  cert.directedness_range = {
      true, rank_of_vectors(cert.range_pos_gens) == cert.range_basis.size()};
  if (!cert.directedness_range.ok) return cert;
  cert.directedness_kernel = {
      true, rank_of_vectors(cert.kernel_pos_gens) == cert.kernel_basis.size()};
  if (!cert.directedness_kernel.ok) return cert;

  // (5) every positive generator of the range is disjoint to every positive
  // generator of the kernel
  cert.cross_disjointness.executed = true;
  cert.cross_disjointness.ok = true;
  for (std::size_t i = 0; i < cert.range_pos_gens.size() && cert.cross_disjointness.ok; ++i) {
    for (std::size_t j = 0; j < cert.kernel_pos_gens.size(); ++j) {
      DisjointnessVerdict d = is_disjoint(K, cert.range_pos_gens[i], cert.kernel_pos_gens[j]);
      const bool ok = d.disjoint;
      cert.cross_pairs.push_back({i, j, std::move(d)});
      if (!ok) {
        cert.cross_disjointness.ok = false;
        cert.cross_failure = {{i, j}};
        break;
      }
    }
  }
  if (!cert.cross_disjointness.ok) return cert;

  // (6) falsification probes: b + d with d != 0 in the kernel must not be
  // disjoint to the kernel's positive span
  cert.falsification_probes.executed = true;
  cert.falsification_probes.ok = true;
  if (!cert.kernel_basis.empty()) {
    RationalSampler sampler(seed ^ 0x8c72f7e35f9ac0d1ULL);
    for (std::size_t t = 0; t < probes; ++t) {
      RVector b(K.dim());
      for (const auto& v : cert.range_basis) b += sampler.draw() * v;
      RVector d(K.dim());
      for (int attempt = 0; attempt < 64 && d.is_zero(); ++attempt) {
        d = RVector(K.dim());
        for (const auto& v : cert.kernel_basis) d += sampler.draw() * v;
      }
      if (d.is_zero()) {
        // all-zero draws 64 times in a row: treat as a failed probe setup
        cert.falsification_probes.ok = false;
        cert.failed_probe = t;
        break;
      }
      SpanDisjointnessVerdict sd = is_disjoint_to_span(K, b + d, cert.kernel_pos_gens);
      if (sd.disjoint) {
        cert.falsification_probes.ok = false;
        cert.failed_probe = t;
        cert.failed_probe_vector = b + d;
        break;
      }
      cert.probe_records.push_back(
          {std::move(b), std::move(d), *sd.failing_generator, std::move(*sd.failure)});
    }
  }
  return cert;
}

std::pair<RVector, RVector> decompose_positive(const ConeSpace& K, const ProjectionMatrix& P,
                                               const RVector& x) {
  if (!is_order_projection(K, P).order_projection)
    throw std::invalid_argument("decompose_positive: not an order projection");
  if (auto v = contains(K, x); !v.holds) throw PositivityError("x", x, *v.violated_row);
  RVector px = P.matrix() * x;
  RVector qx = x - px;
  // Guaranteed for order projections; a failure here is an internal error.
  if (!contains(K, px).holds || !contains(K, qx).holds)
    throw std::logic_error("decompose_positive: component not positive");
  if (!is_disjoint(K, px, qx).disjoint)
    throw std::logic_error("decompose_positive: components not disjoint");
  return {std::move(px), std::move(qx)};
}

ImplicationVerdict check_sum_decomposition(const ConeSpace& K, const RVector& x,
                                           const RVector& y, const RVector& z) {
  if (x != y + z) throw std::invalid_argument("check_sum_decomposition: x != y + z");
  ImplicationVerdict out{};
  out.x_positive = contains(K, x);
  out.yz_disjoint = is_disjoint(K, y, z);
  out.y_positive = contains(K, y);
  out.z_positive = contains(K, z);
  out.hypothesis = out.x_positive.holds && out.yz_disjoint.disjoint;
  out.conclusion = out.y_positive.holds && out.z_positive.holds;
  out.holds = !out.hypothesis || out.conclusion;
  return out;
}

namespace {

bool same_column_space(const RMatrix& P, const RMatrix& Q) {
  std::vector<RVector> p_cols, all_cols;
  for (std::size_t j = 0; j < P.cols(); ++j) p_cols.push_back(P.col(j));
  all_cols = p_cols;
  std::vector<RVector> q_cols;
  for (std::size_t j = 0; j < Q.cols(); ++j) q_cols.push_back(Q.col(j));
  all_cols.insert(all_cols.end(), q_cols.begin(), q_cols.end());
  const std::size_t rp = rank_of_vectors(p_cols);
  const std::size_t rq = rank_of_vectors(q_cols);
  return rp == rq && rank_of_vectors(all_cols) == rp;
}

}  // namespace

UniquenessVerdict uniqueness_check(const ConeSpace& K, const ProjectionMatrix& P,
                                   const ProjectionMatrix& Q) {
  UniquenessVerdict out{};
  out.p_order_projection = is_order_projection(K, P).order_projection;
  out.q_order_projection = is_order_projection(K, Q).order_projection;
  out.same_range = same_column_space(P.matrix(), Q.matrix());
  out.applicable = out.p_order_projection && out.q_order_projection && out.same_range;
  out.equal = P.matrix() == Q.matrix();
  out.holds = !out.applicable || out.equal;
  return out;
}

CorollaryResult corollary_check(const ConeSpace& K, std::span<const RVector> V_basis,
                                std::span<const RVector> W_basis, std::size_t probes,
                                std::uint64_t seed) {
  const std::size_t n = K.dim();
  std::vector<RVector> all(V_basis.begin(), V_basis.end());
  all.insert(all.end(), W_basis.begin(), W_basis.end());
  if (all.size() != n || rank_of_vectors(all) != n)
    throw std::invalid_argument(
        "corollary_check: V and W do not decompose the space (combined rank " +
        std::to_string(rank_of_vectors(all)) + " of " + std::to_string(n) + ")");

  CorollaryResult out{};
  out.disjointness_ok = true;

  // Precheck W subset of V^perp: via V's positive generators when they span
  // V, otherwise pairwise against the basis vectors and their negatives.
  const auto v_pos = subspace_cone_generators(K, V_basis);
  out.used_positive_spanning = rank_of_vectors(v_pos) == V_basis.size();
  for (std::size_t wi = 0; wi < W_basis.size() && out.disjointness_ok; ++wi) {
    if (out.used_positive_spanning) {
      SpanDisjointnessVerdict sd = is_disjoint_to_span(K, W_basis[wi], v_pos);
      if (!sd.disjoint) {
        out.disjointness_ok = false;
        out.failing_w = wi;
        out.disjoint_failure = std::move(sd.failure);
      }
    } else {
      for (const auto& v : V_basis) {
        DisjointnessVerdict d = is_disjoint(K, W_basis[wi], v);
        if (d.disjoint) d = is_disjoint(K, W_basis[wi], -v);
        if (!d.disjoint) {
          out.disjointness_ok = false;
          out.failing_w = wi;
          out.disjoint_failure = std::move(d);
          break;
        }
      }
    }
  }
  if (!out.disjointness_ok) return out;

  // Projection onto V along W: maps the V part of the combined basis to
  // itself and the W part to zero.
  RMatrix B(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) B(i, j) = all[j][i];
  RMatrix D(n, n);
  for (std::size_t j = 0; j < V_basis.size(); ++j) D(j, j) = 1;
  const auto b_inv = inverse(B);
  assert(b_inv);  // full rank checked above
  ProjectionMatrix P(B * D * *b_inv);
  out.certificate = certify_projection_band(K, P, probes, seed);
  return out;
}

}  // namespace ordercone
