#include "ordercone/cone.hpp"

#include <cassert>

#include "ordercone/dd.hpp"
#include "ordercone/linalg.hpp"

namespace ordercone {

namespace {

// A nonzero functional vanishing on every generator, or nullopt when the
// generators span the space.
std::optional<RVector> spanning_defect(const std::vector<RVector>& gens, std::size_t dim) {
  RMatrix rows = RMatrix::from_rows(gens, dim);
  auto kernel = kernel_basis(rows);
  if (kernel.empty()) return std::nullopt;
  return normalize_line(kernel.front());
}

}  // namespace

ConeSpace ConeSpace::from_generators(std::vector<RVector> generators) {
  if (generators.empty()) throw ConeError(ConeError::Kind::bad_input, "no generators");
  const std::size_t dim = generators.front().dim();
  if (dim == 0) throw ConeError(ConeError::Kind::bad_input, "zero-dimensional space");
  for (const auto& g : generators)
    if (g.dim() != dim) throw ConeError(ConeError::Kind::bad_input, "mixed generator dimensions");

  const RMatrix A = vrep_to_hrep(generators);
  auto kernel = kernel_basis(A);
  if (!kernel.empty())
    throw ConeError(ConeError::Kind::not_pointed, "cone contains a line",
                    normalize_line(kernel.front()));
  if (auto defect = spanning_defect(generators, dim))
    throw ConeError(ConeError::Kind::not_generating, "generators do not span the space",
                    *defect);
  std::vector<RVector> canonical = hrep_to_vrep(A);
  return ConeSpace(dim, std::move(canonical), A);
}

ConeSpace ConeSpace::from_halfspaces(const RMatrix& A) {
  if (A.cols() == 0) throw ConeError(ConeError::Kind::bad_input, "zero-dimensional space");
  DDResult dd = dd_rays(A);
  if (!dd.pointed())
    throw ConeError(ConeError::Kind::not_pointed, "cone contains a line",
                    dd.lineality.front());
  if (dd.rays.empty())
    throw ConeError(ConeError::Kind::not_generating, "cone is trivial", std::nullopt);
  if (auto defect = spanning_defect(dd.rays, A.cols()))
    throw ConeError(ConeError::Kind::not_generating, "generators do not span the space",
                    *defect);
  RMatrix canonical_rows = vrep_to_hrep(dd.rays);
  return ConeSpace(A.cols(), std::move(dd.rays), std::move(canonical_rows));
}

OrderVerdict contains(const ConeSpace& K, const RVector& x) {
  if (x.dim() != K.dim()) throw std::invalid_argument("contains: dimension mismatch");
  const RMatrix& A = K.halfspaces();
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (dot(A.row(i), x) < 0) return {false, i};
  return {true, std::nullopt};
}

OrderVerdict leq(const ConeSpace& K, const RVector& x, const RVector& y) {
  return contains(K, y - x);
}

bool is_bounded_multiple(const ConeSpace& K, const RVector& x, const RVector& y) {
  return contains(K, -x).holds && contains(K, y - x).holds;
}

std::vector<RVector> subspace_cone_generators(const ConeSpace& K,
                                              std::span<const RVector> basis) {
  if (basis.empty()) return {};
  if (rank_of_vectors(basis) != basis.size())
    throw std::invalid_argument("subspace_cone_generators: basis not independent");
  for (const auto& v : basis)
    if (v.dim() != K.dim())
      throw std::invalid_argument("subspace_cone_generators: dimension mismatch");

  // span(basis) = {z : N z = 0}; append each defining equation as a +/- pair
  // of halfspaces and run double description on the combined system.
  std::vector<RVector> basis_rows(basis.begin(), basis.end());
  const auto normals = kernel_basis(RMatrix::from_rows(basis_rows, K.dim()));
  RMatrix system = K.halfspaces();
  for (const auto& n : normals) {
    system = system.vstack(RMatrix::from_rows({n}, K.dim()));
    system = system.vstack(RMatrix::from_rows({-n}, K.dim()));
  }
  DDResult dd = dd_rays(system);
  assert(dd.pointed());  // subsets of pointed cones are pointed
  return std::move(dd.rays);
}

}  // namespace ordercone
