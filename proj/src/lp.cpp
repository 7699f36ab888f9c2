#include "ordercone/lp.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace ordercone {

FarkasCertificate::FarkasCertificate(RVector y, const RMatrix& A, const RVector& b)
    : multipliers(std::move(y)) {
  if (multipliers.dim() != A.rows()) throw std::invalid_argument("Farkas: row count mismatch");
  for (std::size_t i = 0; i < multipliers.dim(); ++i)
    if (multipliers[i] < 0) throw std::invalid_argument("Farkas: negative multiplier");
  RVector yta(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) yta[j] += multipliers[i] * A(i, j);
  if (!yta.is_zero()) throw std::invalid_argument("Farkas: y^T A != 0");
  if (dot(multipliers, b) <= 0) throw std::invalid_argument("Farkas: y.b not positive");
}

namespace {

// Dense two-phase tableau over the standard-form variables
//   [ z+ (n) | z- (n) | s (m) | artificial (m) ],
// rows sign-flipped so the right-hand side is nonnegative. Artificial
// columns start as the identity and therefore record the running basis
// inverse, which is where dual values are read from.
class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram& lp)
      : n_(lp.dim()), m_(lp.A.rows()), ncols_(2 * n_ + 2 * m_), lp_(lp) {
    rows_.assign(m_, std::vector<Rational>(ncols_));
    rhs_.assign(m_, Rational(0));
    sigma_.assign(m_, 1);
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      // flip rows with negative rhs so the artificial start is feasible
      sigma_[i] = lp.b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = Rational(sigma_[i]) * lp.A(i, j);
        rows_[i][n_ + j] = -rows_[i][j];
      }
      rows_[i][2 * n_ + i] = Rational(-sigma_[i]);  // slack
      rows_[i][2 * n_ + m_ + i] = 1;                // artificial
      rhs_[i] = Rational(sigma_[i]) * lp.b[i];
      basis_[i] = artificial_col(i);
    }
  }

  LPOutcome run() {
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> cost1(ncols_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) cost1[artificial_col(i)] = 1;
    load_objective(cost1);
    iterate();
    if (obj_value_ != 0) return infeasible_outcome();
    drive_out_artificials();

    // Phase 2: minimize the real objective.
    std::vector<Rational> cost2(ncols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      cost2[j] = lp_.objective[j];
      cost2[n_ + j] = -lp_.objective[j];
    }
    load_objective(cost2);
    const auto unbounded_col = iterate();
    if (unbounded_col) return unbounded_outcome(*unbounded_col);
    return optimal_outcome();
  }

 private:
  std::size_t artificial_col(std::size_t i) const { return 2 * n_ + m_ + i; }
  bool is_structural(std::size_t j) const { return j < 2 * n_ + m_; }

  void load_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    obj_.assign(ncols_, Rational(0));
    obj_value_ = 0;
    for (std::size_t j = 0; j < ncols_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= cb * rows_[i][j];
      obj_value_ += cb * rhs_[i];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / rows_[r][c];
    for (auto& e : rows_[r]) e *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[r][j];
      obj_value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Bland's rule: entering = lowest-index structural column with negative
  // reduced cost; leaving = best ratio, ties by lowest basic column index.
  // Returns the entering column when the problem is unbounded.
  std::optional<std::size_t> iterate() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!is_structural(j)) continue;
        if (obj_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][*entering] <= 0) continue;
        const Rational ratio = rhs_[i] / rows_[i][*entering];
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return entering;  // unbounded in this direction
      pivot(*leave, *entering);
    }
  }

  // After a feasible phase 1, remove artificials from the basis by
  // degenerate pivots. Rows with no structural entry left are 0 = 0 and
  // stay inert: every structural coefficient in them is zero, so they can
  // never be chosen by a ratio test again.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_structural(basis_[i])) continue;
      assert(rhs_[i] == 0);
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < 2 * n_ + m_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) pivot(i, *col);
    }
  }

  RVector current_point() const {
    RVector zplus(n_), zminus(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) zplus[basis_[i]] = rhs_[i];
      else if (basis_[i] < 2 * n_) zminus[basis_[i] - n_] = rhs_[i];
    }
    return zplus - zminus;
  }

  // Dual values of the flipped equality system, read from the artificial
  // block of the objective row, then mapped back to the original rows.
  RVector original_duals() const {
    RVector mu(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational y_i = cost_[artificial_col(i)] - obj_[artificial_col(i)];
      mu[i] = Rational(sigma_[i]) * y_i;
    }
    return mu;
  }

  LPOutcome infeasible_outcome() const {
    LPOutcome out;
    out.status = LPStatus::infeasible;
    out.farkas = FarkasCertificate(original_duals(), lp_.A, lp_.b);
    return out;
  }

  LPOutcome unbounded_outcome(std::size_t entering) const {
    RVector dir(ncols_);
    dir[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      if (rows_[i][entering] != 0) dir[basis_[i]] = -rows_[i][entering];
    RVector ray(n_);
    for (std::size_t j = 0; j < n_; ++j) ray[j] = dir[j] - dir[n_ + j];
    LPOutcome out;
    out.status = LPStatus::unbounded;
    out.point = current_point();
    out.ray = std::move(ray);
    // Internal consistency: the ray must improve and stay feasible.
    assert(dot(lp_.objective, *out.ray) < 0);
#ifndef NDEBUG
    const RVector ar = lp_.A * *out.ray;
    for (std::size_t i = 0; i < m_; ++i) assert(ar[i] >= 0);
    assert(lp_.A.rows() == 0 || HPolyhedron(lp_.A, lp_.b).satisfies(*out.point));
#endif
    return out;
  }

  LPOutcome optimal_outcome() const {
    LPOutcome out;
    out.status = LPStatus::optimal;
    out.point = current_point();
    out.value = obj_value_;
    out.dual = original_duals();
#ifndef NDEBUG
    assert(dot(lp_.objective, *out.point) == *out.value);
    assert(lp_.A.rows() == 0 || HPolyhedron(lp_.A, lp_.b).satisfies(*out.point));
    RVector atmu(n_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) atmu[j] += (*out.dual)[i] * lp_.A(i, j);
    assert(atmu == lp_.objective);
    for (std::size_t i = 0; i < m_; ++i) assert((*out.dual)[i] >= 0);
    assert(dot(*out.dual, lp_.b) == *out.value);
#endif
    return out;
  }

  std::size_t n_, m_, ncols_;
  const LinearProgram& lp_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_, obj_;
  Rational obj_value_;
};

}  // namespace

LPOutcome solve_lp(const LinearProgram& lp) {
  SimplexTableau t(lp);
  return t.run();
}

FeasibilityVerdict is_feasible(const RMatrix& A, const RVector& b) {
  if (A.rows() != b.dim()) throw std::invalid_argument("is_feasible: dimension mismatch");
  LinearProgram lp(RVector(A.cols()), A, b);
  const LPOutcome out = solve_lp(lp);
  FeasibilityVerdict v;
  if (out.status == LPStatus::infeasible) {
    v.feasible = false;
    v.certificate = out.farkas;
  } else {
    v.feasible = true;
    v.point = out.point;
  }
  return v;
}

namespace {

// Merge rows sharing a normal vector into one row with the largest
// right-hand side; the feasible set is unchanged and the LP shrinks.
// `representative[k]` is the original row index whose rhs won group k.
struct CompactSystem {
  RMatrix A;
  RVector b;
  std::vector<std::size_t> representative;
};

CompactSystem compact_rows(const RMatrix& A, const RVector& b) {
  std::map<std::vector<Rational>, std::size_t> seen;  // normal -> group
  CompactSystem out;
  std::vector<RVector> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const RVector r = A.row(i);
    auto [it, inserted] = seen.try_emplace(r.entries(), rows.size());
    if (inserted) {
      rows.push_back(r);
      rhs.push_back(b[i]);
      out.representative.push_back(i);
    } else if (b[i] > rhs[it->second]) {
      rhs[it->second] = b[i];
      out.representative[it->second] = i;
    }
  }
  out.A = RMatrix::from_rows(rows, A.cols());
  out.b = RVector(std::move(rhs));
  return out;
}

}  // namespace

ValidityVerdict is_valid_inequality(const HPolyhedron& P, const RVector& c, const Rational& d) {
  if (c.dim() != P.dim()) throw std::invalid_argument("is_valid_inequality: dimension mismatch");
  ValidityVerdict v;

  // Cheap sufficient check: a single row of P with the same normal and a
  // right-hand side >= d already proves validity with a unit multiplier.
  for (std::size_t i = 0; i < P.num_rows(); ++i) {
    if (P.b[i] < d) continue;
    if (P.A.row(i) == c) {
      v.valid = true;
      RVector unit(P.num_rows());
      unit[i] = 1;
      v.multipliers = std::move(unit);
      return v;
    }
  }

  const CompactSystem cs = compact_rows(P.A, P.b);
  const LPOutcome out = solve_lp(LinearProgram(c, cs.A, cs.b));
  switch (out.status) {
    case LPStatus::infeasible: {
      v.valid = true;
      RVector y(P.num_rows());
      for (std::size_t k = 0; k < cs.representative.size(); ++k)
        y[cs.representative[k]] = out.farkas->multipliers[k];
      v.empty = FarkasCertificate(std::move(y), P.A, P.b);
      return v;
    }
    case LPStatus::optimal: {
      if (*out.value >= d) {
        v.valid = true;
        RVector lambda(P.num_rows());
        for (std::size_t k = 0; k < cs.representative.size(); ++k)
          lambda[cs.representative[k]] = (*out.dual)[k];
        v.multipliers = std::move(lambda);
      } else {
        v.valid = false;
        v.witness = out.point;
      }
      return v;
    }
    case LPStatus::unbounded: {
      v.valid = false;
      // Walk from the feasible point along the improving ray until the
      // inequality is violated.
      const Rational at_point = dot(c, *out.point);
      const Rational slope = dot(c, *out.ray);  // < 0
      Rational t = 1;
      if (at_point >= d) t = (d - at_point) / slope + 1;
      v.witness = *out.point + t * *out.ray;
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace ordercone
