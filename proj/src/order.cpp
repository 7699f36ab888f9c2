#include "ordercone/order.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "ordercone/dd.hpp"
#include "ordercone/linalg.hpp"

namespace ordercone {

HPolyhedron upper_bound_set(const ConeSpace& K, std::span<const RVector> S) {
  if (S.empty()) throw std::invalid_argument("upper_bound_set: empty set");
  const RMatrix& A = K.halfspaces();
  RMatrix rows(S.size() * A.rows(), K.dim());
  RVector rhs(S.size() * A.rows());
  std::size_t r = 0;
  for (const auto& s : S) {
    if (s.dim() != K.dim()) throw std::invalid_argument("upper_bound_set: dimension mismatch");
    const RVector as = A * s;
    for (std::size_t i = 0; i < A.rows(); ++i, ++r) {
      for (std::size_t j = 0; j < K.dim(); ++j) rows(r, j) = A(i, j);
      rhs[r] = as[i];
    }
  }
  return HPolyhedron(std::move(rows), std::move(rhs));
}

HPolyhedron lower_bound_set(const ConeSpace& K, std::span<const RVector> S) {
  if (S.empty()) throw std::invalid_argument("lower_bound_set: empty set");
  const RMatrix& A = K.halfspaces();
  RMatrix rows(S.size() * A.rows(), K.dim());
  RVector rhs(S.size() * A.rows());
  std::size_t r = 0;
  for (const auto& s : S) {
    if (s.dim() != K.dim()) throw std::invalid_argument("lower_bound_set: dimension mismatch");
    const RVector as = A * s;
    for (std::size_t i = 0; i < A.rows(); ++i, ++r) {
      for (std::size_t j = 0; j < K.dim(); ++j) rows(r, j) = -A(i, j);
      rhs[r] = -as[i];
    }
  }
  return HPolyhedron(std::move(rows), std::move(rhs));
}

SubsetVerdict poly_subset(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw std::invalid_argument("poly_subset: dimension mismatch");
  SubsetVerdict out;
  out.subset = true;

  // Rows of Q sharing a normal are decided once, at the largest right-hand
  // side; the same multipliers then certify every dominated row.
  std::map<std::vector<Rational>, std::size_t> strongest;
  for (std::size_t j = 0; j < Q.num_rows(); ++j) {
    auto [it, inserted] = strongest.try_emplace(Q.A.row(j).entries(), j);
    if (!inserted && Q.b[j] > Q.b[it->second]) it->second = j;
  }

  std::map<std::size_t, ValidityVerdict> solved;
  for (const auto& [normal, j] : strongest) {
    ValidityVerdict v = is_valid_inequality(P, RVector(normal), Q.b[j]);
    if (!v.valid) {
      out.subset = false;
      out.failed_row = j;
      out.witness = v.witness;
      out.proofs.clear();
      assert(out.witness && P.satisfies(*out.witness) &&
             dot(Q.A.row(j), *out.witness) < Q.b[j]);
      return out;
    }
    solved.emplace(j, std::move(v));
  }
  for (std::size_t j = 0; j < Q.num_rows(); ++j) {
    const std::size_t rep = strongest.at(Q.A.row(j).entries());
    out.proofs.push_back({j, solved.at(rep)});
  }
  return out;
}

EqualityVerdict poly_equal(const HPolyhedron& P, const HPolyhedron& Q) {
  EqualityVerdict out;
  out.forward = poly_subset(P, Q);
  if (!out.forward.subset) {
    out.equal = false;
    return out;
  }
  out.backward = poly_subset(Q, P);
  out.equal = out.backward->subset;
  return out;
}

DisjointnessVerdict is_disjoint(const ConeSpace& K, const RVector& x, const RVector& y) {
  const RVector sum = x + y;
  const RVector diff = x - y;
  const std::vector<RVector> s1{sum, -sum};
  const std::vector<RVector> s2{diff, -diff};
  const HPolyhedron u1 = upper_bound_set(K, s1);
  const HPolyhedron u2 = upper_bound_set(K, s2);

  DisjointnessVerdict out;
  out.detail = poly_equal(u1, u2);
  out.disjoint = out.detail.equal;
  if (!out.disjoint) {
    if (!out.detail.forward.subset) {
      // some upper bound of {x+y, -x-y} fails to dominate {x-y, y-x}
      out.direction_failed = DisjointFailureDirection::u1_not_subset_u2;
      out.witness = out.detail.forward.witness;
    } else {
      out.direction_failed = DisjointFailureDirection::u2_not_subset_u1;
      out.witness = out.detail.backward->witness;
    }
  }
  return out;
}

InfimumZeroVerdict is_infimum_zero(const ConeSpace& K, const RVector& x, const RVector& y) {
  if (auto v = contains(K, x); !v.holds) throw PositivityError("x", x, *v.violated_row);
  if (auto v = contains(K, y); !v.holds) throw PositivityError("y", y, *v.violated_row);
  const std::vector<RVector> pair{x, y};
  const HPolyhedron lower = lower_bound_set(K, pair);
  RMatrix neg(K.halfspaces().rows(), K.dim());
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -K.halfspaces()(i, j);
  const HPolyhedron minus_cone = HPolyhedron::cone_rows(std::move(neg));

  InfimumZeroVerdict out;
  out.detail = poly_subset(lower, minus_cone);
  out.zero_infimum = out.detail.subset;
  out.witness = out.detail.witness;
  return out;
}

InfimumZeroVerdict is_infimum_zero_by_enumeration(const ConeSpace& K, const RVector& x,
                                                  const RVector& y) {
  if (auto v = contains(K, x); !v.holds) throw PositivityError("x", x, *v.violated_row);
  if (auto v = contains(K, y); !v.holds) throw PositivityError("y", y, *v.violated_row);
  const std::vector<RVector> pair{x, y};
  const HPolyhedron lower = lower_bound_set(K, pair);

  // Homogenize: L = {f : M f >= c} becomes {(f,t) : M f - c t >= 0, t >= 0}.
  const std::size_t n = K.dim();
  RMatrix hom(lower.num_rows() + 1, n + 1);
  for (std::size_t i = 0; i < lower.num_rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) hom(i, j) = lower.A(i, j);
    hom(i, n) = -lower.b[i];
  }
  hom(lower.num_rows(), n) = 1;
  const std::vector<RVector> rays = hrep_to_vrep(hom);

  InfimumZeroVerdict out;
  out.zero_infimum = true;
  for (const auto& r : rays) {
    RVector f(n);
    const bool is_vertex = r[n] != 0;
    for (std::size_t j = 0; j < n; ++j) f[j] = is_vertex ? r[j] / r[n] : r[j];
    if (contains(K, -f).holds) continue;
    out.zero_infimum = false;
    // A bad vertex is itself a lower bound outside -X+. A bad recession
    // direction f gives the lower bound 0 + f, outside -X+ for the same
    // violated halfspace.
    out.witness = f;
    break;
  }
#ifndef NDEBUG
  if (out.witness) {
    assert(lower.satisfies(*out.witness));
    assert(!contains(K, -*out.witness).holds);
  }
#endif
  return out;
}

InfimumVerdict verify_infimum(const ConeSpace& K, const RVector& g, const RVector& x,
                              const RVector& y) {
  InfimumVerdict out;
  out.is_lower_bound = leq(K, g, x).holds && leq(K, g, y).holds;
  if (!out.is_lower_bound) {
    out.is_infimum = false;
    return out;
  }
  const std::vector<RVector> pair{x, y};
  const HPolyhedron lower = lower_bound_set(K, pair);
  const std::vector<RVector> just_g{g};
  const HPolyhedron below_g = lower_bound_set(K, just_g);
  out.detail = poly_subset(lower, below_g);
  out.is_infimum = out.detail.subset;
  out.witness = out.detail.witness;
  return out;
}

RVector infimum_simplicial(const ConeSpace& K, const RVector& x, const RVector& y) {
  if (!K.simplicial()) throw std::invalid_argument("infimum_simplicial: cone is not simplicial");
  const RMatrix& A = K.halfspaces();
  const auto inv = inverse(A);
  if (!inv) throw std::invalid_argument("infimum_simplicial: halfspace matrix not invertible");
  const RVector u = A * x;
  const RVector v = A * y;
  RVector w(K.dim());
  for (std::size_t i = 0; i < K.dim(); ++i) w[i] = std::min(u[i], v[i]);
  return *inv * w;
}

SpanDisjointnessVerdict is_disjoint_to_span(const ConeSpace& K, const RVector& x,
                                            std::span<const RVector> gens) {
  SpanDisjointnessVerdict out;
  out.disjoint = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    DisjointnessVerdict d = is_disjoint(K, x, gens[i]);
    if (!d.disjoint) {
      out.disjoint = false;
      out.failing_generator = i;
      out.failure = std::move(d);
      return out;
    }
  }
  return out;
}

}  // namespace ordercone
