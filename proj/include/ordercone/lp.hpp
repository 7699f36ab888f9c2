// Exact rational linear programming over free variables:
//
//     minimize  c.z   subject to   A z >= b,
//
// solved by a two-phase primal simplex with Bland's pivot rule on a dense
// rational tableau. Every outcome carries a certificate that can be
// re-checked by plain arithmetic, with no solver involved:
//
//   optimal    - a feasible point plus dual multipliers y >= 0 with
//                A^T y = c and b.y = c.z (strong duality),
//   infeasible - Farkas multipliers y >= 0 with y^T A = 0, y.b > 0,
//   unbounded  - a feasible point plus an improving ray r with
//                A r >= 0 and c.r < 0.
#pragma once

#include <optional>

#include "ordercone/polyhedron.hpp"
#include "ordercone/rational.hpp"

namespace ordercone {

struct LinearProgram {
  RVector objective;  // c
  RMatrix A;
  RVector b;

  LinearProgram(RVector c, RMatrix a, RVector rhs)
      : objective(std::move(c)), A(std::move(a)), b(std::move(rhs)) {
    if (A.cols() != objective.dim() || A.rows() != b.dim())
      throw std::invalid_argument("LinearProgram: inconsistent dimensions");
  }

  std::size_t dim() const { return objective.dim(); }
};

// Nonnegative multipliers proving A z >= b infeasible: y^T A = 0, y.b > 0.
// The invariant is checked on construction.
struct FarkasCertificate {
  RVector multipliers;

  FarkasCertificate(RVector y, const RMatrix& A, const RVector& b);
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPOutcome {
  LPStatus status;
  std::optional<Rational> value;
  std::optional<RVector> point;  // optimal: a minimizer; unbounded: a feasible point
  std::optional<RVector> dual;   // optimal only
  std::optional<RVector> ray;    // unbounded only
  std::optional<FarkasCertificate> farkas;  // infeasible only
};

LPOutcome solve_lp(const LinearProgram& lp);

struct FeasibilityVerdict {
  bool feasible;
  std::optional<RVector> point;
  std::optional<FarkasCertificate> certificate;
};

FeasibilityVerdict is_feasible(const RMatrix& A, const RVector& b);

// Is c.z >= d for every z in P? Vacuously true when P is empty. On a true
// verdict one of `multipliers` (lambda >= 0, lambda^T A = c, lambda.b >= d)
// and `empty` is set; on false, `witness` is a point of P with c.witness < d.
struct ValidityVerdict {
  bool valid;
  std::optional<RVector> multipliers;
  std::optional<FarkasCertificate> empty;
  std::optional<RVector> witness;
};

ValidityVerdict is_valid_inequality(const HPolyhedron& P, const RVector& c, const Rational& d);

}  // namespace ordercone
