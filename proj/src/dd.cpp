#include "ordercone/dd.hpp"

#include <algorithm>
#include <cassert>

#include "ordercone/linalg.hpp"

namespace ordercone {

namespace {

// Incremental double description. The state (lineality, rays) describes the
// intersection of the halfspaces processed so far; every processed row
// annihilates every lineality vector, so the rays can be treated as a
// minimal description of the pointed quotient modulo the lineality space.
class DDState {
 public:
  explicit DDState(std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
      RVector e(dim);
      e[i] = 1;
      lineality_.push_back(std::move(e));
    }
  }

  void add_halfspace(const RVector& a) {
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (dot(a, lineality_[i]) != 0) {
        cut_lineality(a, i);
        processed_.push_back(a);
        return;
      }
    }
    cut_rays(a);
    processed_.push_back(a);
  }

  const std::vector<RVector>& rays() const { return rays_; }
  const std::vector<RVector>& lineality() const { return lineality_; }

 private:
  // The halfspace cuts the lineality space: one lineality direction turns
  // into a ray, the rest of the description is shifted into the hyperplane
  // {a.z = 0}.
  void cut_lineality(const RVector& a, std::size_t pivot_index) {
    RVector pivot = lineality_[pivot_index];
    if (dot(a, pivot) < 0) pivot = -pivot;
    const Rational ap = dot(a, pivot);
    std::vector<RVector> new_lin;
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i == pivot_index) continue;
      const Rational f = dot(a, lineality_[i]) / ap;
      RVector adjusted = lineality_[i] - f * pivot;
      if (!adjusted.is_zero()) new_lin.push_back(normalize_line(adjusted));
    }
    std::vector<RVector> new_rays;
    for (const auto& r : rays_) {
      const Rational f = dot(a, r) / ap;
      RVector adjusted = r - f * pivot;
      assert(!adjusted.is_zero());
      new_rays.push_back(normalize_ray(adjusted));
    }
    new_rays.push_back(normalize_ray(pivot));
    lineality_ = std::move(new_lin);
    rays_ = std::move(new_rays);
  }

  void cut_rays(const RVector& a) {
    std::vector<std::size_t> pos, zero, neg;
    std::vector<Rational> val(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      val[i] = dot(a, rays_[i]);
      (val[i] > 0 ? pos : val[i] < 0 ? neg : zero).push_back(i);
    }
    if (neg.empty()) return;
    std::vector<RVector> out;
    for (auto i : pos) out.push_back(rays_[i]);
    for (auto i : zero) out.push_back(rays_[i]);
    for (auto p : pos) {
      for (auto m : neg) {
        if (!adjacent(p, m)) continue;
        RVector combo = val[p] * rays_[m] - val[m] * rays_[p];
        assert(!combo.is_zero());
        out.push_back(normalize_ray(combo));
      }
    }
    rays_ = std::move(out);
  }

  // Combinatorial adjacency test on the zero sets of the processed rows:
  // p and m are adjacent iff no third ray is tight on every row that both
  // p and m are tight on. Valid because the ray set stays minimal.
  bool adjacent(std::size_t p, std::size_t m) const {
    std::vector<std::size_t> common;
    for (std::size_t k = 0; k < processed_.size(); ++k)
      if (dot(processed_[k], rays_[p]) == 0 && dot(processed_[k], rays_[m]) == 0)
        common.push_back(k);
    for (std::size_t r = 0; r < rays_.size(); ++r) {
      if (r == p || r == m) continue;
      bool covers = true;
      for (auto k : common) {
        if (dot(processed_[k], rays_[r]) != 0) {
          covers = false;
          break;
        }
      }
      if (covers) return false;
    }
    return true;
  }

  std::vector<RVector> lineality_;
  std::vector<RVector> rays_;
  std::vector<RVector> processed_;
};

// Canonical representative of a ray modulo the lineality span: subtract the
// orthogonal projection onto the span, then renormalize.
RVector reduce_mod_lineality(const RVector& r, const std::vector<RVector>& lin) {
  if (lin.empty()) return normalize_ray(r);
  RVector out = r;
  // the lineality vectors are not guaranteed orthogonal; Gram-Schmidt first
  std::vector<RVector> ortho;
  for (const auto& l : lin) {
    RVector v = l;
    for (const auto& o : ortho) v -= (dot(v, o) / dot(o, o)) * o;
    if (!v.is_zero()) ortho.push_back(v);
  }
  for (const auto& o : ortho) out -= (dot(out, o) / dot(o, o)) * o;
  return normalize_ray(out);
}

}  // namespace

DDResult dd_rays(const RMatrix& A) {
  DDState state(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    RVector row = A.row(i);
    if (row.is_zero()) continue;
    state.add_halfspace(normalize_ray(row));
  }
  DDResult result;
  result.lineality = state.lineality();
  for (const auto& r : state.rays())
    result.rays.push_back(reduce_mod_lineality(r, result.lineality));
  std::sort(result.rays.begin(), result.rays.end());
  result.rays.erase(std::unique(result.rays.begin(), result.rays.end()), result.rays.end());
  std::sort(result.lineality.begin(), result.lineality.end());
#ifndef NDEBUG
  for (const auto& r : result.rays)
    for (std::size_t i = 0; i < A.rows(); ++i) assert(dot(A.row(i), r) >= 0);
  for (const auto& l : result.lineality)
    for (std::size_t i = 0; i < A.rows(); ++i) assert(dot(A.row(i), l) == 0);
#endif
  return result;
}

std::vector<RVector> hrep_to_vrep(const RMatrix& A) {
  DDResult dd = dd_rays(A);
  if (!dd.pointed()) throw NotPointedError(dd.lineality.front());
  return std::move(dd.rays);
}

RMatrix vrep_to_hrep(std::span<const RVector> generators) {
  if (generators.empty()) throw std::invalid_argument("vrep_to_hrep: no generators");
  const std::size_t dim = generators.front().dim();
  std::vector<RVector> rows;
  for (const auto& g : generators) {
    if (g.dim() != dim) throw std::invalid_argument("vrep_to_hrep: mixed dimensions");
    if (!g.is_zero()) rows.push_back(g);
  }
  // Facet normals of cone(G) are the extreme rays of the dual cone
  // {a : a.g >= 0 for all g}; lineality of the dual pins span(G) with
  // equality pairs.
  DDResult dual;
  if (rows.empty()) {
    // cone {0}: the dual is all of R^dim
    DDState s(dim);
    dual.lineality = s.lineality();
  } else {
    dual = dd_rays(RMatrix::from_rows(rows, dim));
  }
  std::vector<RVector> out = dual.rays;
  for (const auto& l : dual.lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return RMatrix::from_rows(out, dim);
}

}  // namespace ordercone
