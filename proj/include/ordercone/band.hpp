// Order projections and band projections: positivity of projections,
// certified band decompositions, uniqueness, and the subspace-complement
// construction. A BandCertificate is a self-contained, re-checkable record
// that a projection's range is a projection band.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordercone/cone.hpp"
#include "ordercone/order.hpp"
#include "ordercone/rational.hpp"

namespace ordercone {

// A square idempotent matrix; idempotence is checked on construction.
class ProjectionMatrix {
 public:
  explicit ProjectionMatrix(RMatrix m);

  const RMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

  // I - P
  RMatrix complement_matrix() const;

  friend bool operator==(const ProjectionMatrix& a, const ProjectionMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  RMatrix m_;
};

// M maps X+ into itself? Checked on the cone generators; a failing
// generator together with its image and the violated halfspace is the
// witness.
struct PositivityVerdict {
  bool positive;
  std::optional<std::size_t> generator_index;
  std::optional<RVector> image;
  std::optional<std::size_t> violated_row;
};

PositivityVerdict is_positive_operator(const ConeSpace& K, const RMatrix& M);

// P and I - P both positive. The equivalent rendering 0 <= Pg <= g on the
// generators is evaluated independently and required to agree.
struct OrderProjectionVerdict {
  bool order_projection;
  PositivityVerdict projection_positive;
  PositivityVerdict complement_positive;
  bool renderings_agree;
};

OrderProjectionVerdict is_order_projection(const ConeSpace& K, const ProjectionMatrix& P);

struct ProbeRecord {
  RVector range_part;   // b, in range(P)
  RVector kernel_part;  // d, in ker(P), nonzero
  // disjointness of b + d to span(kernel_pos_gens) must fail:
  std::size_t failing_generator;
  DisjointnessVerdict failure;
};

struct BandCertificate {
  // The six named checks, in execution order. A later check is skipped
  // (executed = false) when an earlier one fails.
  struct Check {
    bool executed = false;
    bool ok = false;
  };

  BandCertificate(ConeSpace c, ProjectionMatrix p, std::uint64_t s, std::size_t probes)
      : cone(std::move(c)), projection(std::move(p)), seed(s), requested_probes(probes) {}

  ConeSpace cone;
  ProjectionMatrix projection;
  std::uint64_t seed = 0;
  std::size_t requested_probes = 0;

  Check order_projection;
  Check basis_decomposition;
  Check directedness_range;
  Check directedness_kernel;
  Check cross_disjointness;
  Check falsification_probes;

  OrderProjectionVerdict order_projection_detail{};
  std::vector<RVector> range_basis, kernel_basis;
  std::vector<RVector> range_pos_gens, kernel_pos_gens;

  struct CrossPair {
    std::size_t range_index;
    std::size_t kernel_index;
    DisjointnessVerdict verdict;
  };
  std::vector<CrossPair> cross_pairs;
  std::optional<std::pair<std::size_t, std::size_t>> cross_failure;

  std::vector<ProbeRecord> probe_records;
  // Probe that unexpectedly came out disjoint, with the offending vector.
  std::optional<std::size_t> failed_probe;
  std::optional<RVector> failed_probe_vector;

  bool valid() const;
  std::vector<std::string> failed_check_names() const;
};

// Runs, in order: the order-projection check; range/kernel basis extraction;
// positive generators of both subspaces; directedness (the positive
// generators span); pairwise cross-disjointness between the two generator
// sets; and seeded falsification probes asserting that b + d with
// 0 != d in ker(P) is never disjoint to the kernel's positive span.
BandCertificate certify_projection_band(const ConeSpace& K, const ProjectionMatrix& P,
                                        std::size_t probes = 64, std::uint64_t seed = 0);

// For an order projection P and x in X+: (Px, x - Px), both positive and
// mutually disjoint (asserted).
std::pair<RVector, RVector> decompose_positive(const ConeSpace& K, const ProjectionMatrix& P,
                                               const RVector& x);

// x = y + z (checked). Hypothesis: x >= 0 and y disjoint to z; conclusion:
// y >= 0 and z >= 0. Reports both and whether the implication held.
struct ImplicationVerdict {
  bool hypothesis;
  bool conclusion;
  bool holds;
  OrderVerdict x_positive, y_positive, z_positive;
  DisjointnessVerdict yz_disjoint;
};

ImplicationVerdict check_sum_decomposition(const ConeSpace& K, const RVector& x,
                                           const RVector& y, const RVector& z);

// If P and Q are both order projections with the same range, they must be
// equal entrywise.
struct UniquenessVerdict {
  bool p_order_projection;
  bool q_order_projection;
  bool same_range;
  bool applicable;  // hypothesis of the implication
  bool equal;
  bool holds;  // !applicable || equal
};

UniquenessVerdict uniqueness_check(const ConeSpace& K, const ProjectionMatrix& P,
                                   const ProjectionMatrix& Q);

// V_basis + W_basis must be a basis of X (else std::invalid_argument with
// the rank defect). If every w is disjoint to span(V), builds the
// projection onto V along W and runs certify_projection_band on it.
struct CorollaryResult {
  bool disjointness_ok;
  std::optional<std::size_t> failing_w;
  std::optional<DisjointnessVerdict> disjoint_failure;
  bool used_positive_spanning;  // precheck via V's positive generators
  std::optional<BandCertificate> certificate;

  bool ok() const {
    return disjointness_ok && certificate.has_value() && certificate->valid();
  }
};

CorollaryResult corollary_check(const ConeSpace& K, std::span<const RVector> V_basis,
                                std::span<const RVector> W_basis, std::size_t probes = 64,
                                std::uint64_t seed = 0);

}  // namespace ordercone
