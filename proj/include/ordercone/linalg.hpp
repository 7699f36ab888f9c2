// Exact linear algebra over the rationals: solving, kernels, ranks, inverses.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordercone/rational.hpp"

namespace ordercone {

// Some x with A*x = b, or nullopt when the system is inconsistent. Free
// variables are set to zero, so the result is deterministic.
std::optional<RVector> solve_linear(const RMatrix& A, const RVector& b);

// Basis of {x : A*x = 0}; empty when the kernel is trivial. One basis vector
// per free column of the reduced echelon form, in column order.
std::vector<RVector> kernel_basis(const RMatrix& A);

// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing row denominators.
std::size_t rank(const RMatrix& A);

std::size_t rank_of_vectors(std::span<const RVector> vs);

Rational determinant(const RMatrix& A);

std::optional<RMatrix> inverse(const RMatrix& A);

// Basis of the column space: the pivot columns of A.
std::vector<RVector> column_space_basis(const RMatrix& A);

// Scale by the positive rational that makes all entries coprime integers.
// The zero vector is returned unchanged; direction (sign) is preserved.
RVector normalize_ray(const RVector& v);

// normalize_ray plus a sign flip making the first nonzero entry positive.
// Only valid where both signs denote the same object (lines, row normals).
RVector normalize_line(const RVector& v);

}  // namespace ordercone
