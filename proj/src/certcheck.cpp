#include "ordercone/certcheck.hpp"

#include <map>
#include <optional>

#include "ordercone/linalg.hpp"
#include "ordercone/rational.hpp"

namespace ordercone::certcheck {

namespace {

using nlohmann::json;

// Local parsing: certcheck deliberately does not share the loader code of
// the rest of the toolkit.
Rational q(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

RVector vec(const json& j) {
  RVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = q(j[i]);
  return v;
}

RMatrix mat(const json& j) {
  if (j.empty()) return RMatrix();
  RMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) m.set_row(i, vec(j[i]));
  return m;
}

std::vector<RVector> vec_list(const json& j) {
  std::vector<RVector> out;
  for (const auto& e : j) out.push_back(vec(e));
  return out;
}

struct System {
  RMatrix A;
  RVector b;

  // Row-based so that degenerate empty systems (0 rows, unknown column
  // count after a JSON round trip) behave as the vacuous truth.
  bool satisfies(const RVector& z) const {
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (A.cols() != z.dim()) return false;
      if (dot(A.row(i), z) < b[i]) return false;
    }
    return true;
  }

  bool maps_into_halfspaces(const RVector& ray) const {
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (A.cols() != ray.dim()) return false;
      if (dot(A.row(i), ray) < 0) return false;
    }
    return true;
  }
};

// The upper-bound system of {s1, s2}: A z >= A s1 stacked over A z >= A s2.
System upper_bound_system(const RMatrix& cone_rows, const RVector& s1, const RVector& s2) {
  const std::size_t m = cone_rows.rows(), n = cone_rows.cols();
  System s{RMatrix(2 * m, n), RVector(2 * m)};
  const RVector r1 = cone_rows * s1;
  const RVector r2 = cone_rows * s2;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.A(i, j) = cone_rows(i, j);
      s.A(m + i, j) = cone_rows(i, j);
    }
    s.b[i] = r1[i];
    s.b[m + i] = r2[i];
  }
  return s;
}

bool nonneg(const RVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] < 0) return false;
  return true;
}

// y^T A in a target dimension; empty systems contribute the zero vector.
RVector left_multiply(const RVector& y, const RMatrix& A, std::size_t ncols) {
  RVector out(ncols);
  for (std::size_t i = 0; i < A.rows() && i < y.dim(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < ncols && j < A.cols(); ++j) out[j] += y[i] * A(i, j);
  }
  return out;
}

// lambda >= 0, lambda^T A = c, lambda.b >= d proves c.z >= d over {Az >= b}.
bool check_multipliers(const System& p, const RVector& lambda, const RVector& c,
                       const Rational& d) {
  if (lambda.dim() != p.A.rows()) return false;
  if (!nonneg(lambda)) return false;
  if (left_multiply(lambda, p.A, c.dim()) != c) return false;
  return dot(lambda, p.b) >= d;
}

// y >= 0, y^T A = 0, y.b > 0 proves {Az >= b} empty.
bool check_farkas(const System& p, const RVector& y, std::size_t dim) {
  if (y.dim() != p.A.rows()) return false;
  if (!nonneg(y)) return false;
  if (!left_multiply(y, p.A, dim).is_zero()) return false;
  return dot(y, p.b) > 0;
}

void check_subset_claim(const System& p, const System& q, const json& verdict,
                        const std::string& where, RecheckReport& rep) {
  if (!verdict.value("subset", false)) {
    // failed subset: witness in P violating the named row of Q
    if (!verdict.contains("witness") || !verdict.contains("failed_row")) {
      rep.fail(where + ": failed subset without witness");
      return;
    }
    const RVector w = vec(verdict["witness"]);
    const std::size_t row = verdict["failed_row"].get<std::size_t>();
    if (!p.satisfies(w)) rep.fail(where + ": witness not in P");
    if (row >= q.A.rows() || dot(q.A.row(row), w) >= q.b[row])
      rep.fail(where + ": witness does not violate the named row of Q");
    return;
  }
  const json proofs = verdict.value("proofs", json::array());
  std::map<std::size_t, const json*> proof_by_row;
  for (const auto& pr : proofs) proof_by_row[pr.at("row").get<std::size_t>()] = &pr;
  for (std::size_t r = 0; r < q.A.rows(); ++r) {
    auto it = proof_by_row.find(r);
    if (it == proof_by_row.end()) {
      rep.fail(where + ": no proof for row " + std::to_string(r));
      continue;
    }
    const json& pr = *it->second;
    if (!pr.value("valid", false)) {
      rep.fail(where + ": proof for row " + std::to_string(r) + " marked invalid");
      continue;
    }
    if (pr.contains("multipliers")) {
      if (!check_multipliers(p, vec(pr["multipliers"]), q.A.row(r), q.b[r]))
        rep.fail(where + ": bad multipliers for row " + std::to_string(r));
    } else if (pr.contains("empty")) {
      if (!check_farkas(p, vec(pr["empty"]["multipliers"]), q.A.cols()))
        rep.fail(where + ": bad emptiness certificate for row " + std::to_string(r));
    } else {
      rep.fail(where + ": proof for row " + std::to_string(r) + " carries no certificate");
    }
  }
}

void check_disjointness_claim(const RMatrix& cone_rows, const RVector& x, const RVector& y,
                              const json& verdict, const std::string& where,
                              RecheckReport& rep) {
  const System u1 = upper_bound_system(cone_rows, x + y, -(x + y));
  const System u2 = upper_bound_system(cone_rows, x - y, y - x);
  const json& detail = verdict.at("detail");
  if (verdict.value("disjoint", false)) {
    if (!detail.at("forward").value("subset", false) || !detail.contains("backward") ||
        !detail.at("backward").value("subset", false)) {
      rep.fail(where + ": disjoint claim contradicts its own subset verdicts");
      return;
    }
    check_subset_claim(u1, u2, detail.at("forward"), where + "/forward", rep);
    check_subset_claim(u2, u1, detail.at("backward"), where + "/backward", rep);
    return;
  }
  const std::string dir = verdict.value("direction_failed", "");
  if (dir == "u1_not_subset_u2") {
    if (detail.at("forward").value("subset", false)) {
      rep.fail(where + ": claimed failing direction did not fail");
      return;
    }
    check_subset_claim(u1, u2, detail.at("forward"), where + "/forward", rep);
  } else if (dir == "u2_not_subset_u1") {
    if (!detail.contains("backward") || detail.at("backward").value("subset", false)) {
      rep.fail(where + ": claimed failing direction did not fail");
      return;
    }
    check_subset_claim(u2, u1, detail.at("backward"), where + "/backward", rep);
  } else {
    rep.fail(where + ": non-disjoint claim without failing direction");
  }
}

struct RawCone {
  RMatrix rows;
  std::vector<RVector> generators;
};

std::optional<RawCone> load_cone(const json& j, RecheckReport& rep) {
  if (!j.contains("halfspaces") || !j.contains("generators")) {
    rep.fail("cone: missing halfspaces or generators");
    return std::nullopt;
  }
  RawCone c{mat(j["halfspaces"]), vec_list(j["generators"])};
  for (const auto& g : c.generators) {
    const RVector ag = c.rows * g;
    if (!nonneg(ag)) {
      rep.fail("cone: generator outside its own halfspaces");
      return std::nullopt;
    }
  }
  return c;
}

bool in_cone(const RawCone& c, const RVector& v) { return nonneg(c.rows * v); }

}  // namespace

RecheckReport recheck_lp_outcome(const json& j) {
  RecheckReport rep;
  const json& lp = j.at("lp");
  const RVector c = vec(lp.at("objective"));
  const System sys{mat(lp.at("A")), vec(lp.at("b"))};
  const json& out = j.at("outcome");
  const std::string status = out.at("status").get<std::string>();
  if (status == "optimal") {
    const RVector point = vec(out.at("point"));
    const RVector dual = vec(out.at("dual"));
    const Rational value = q(out.at("value"));
    if (!sys.satisfies(point)) rep.fail("optimal: point infeasible");
    if (dot(c, point) != value) rep.fail("optimal: objective mismatch");
    if (!nonneg(dual)) rep.fail("optimal: negative dual");
    if (left_multiply(dual, sys.A, c.dim()) != c) rep.fail("optimal: A^T y != c");
    if (dot(dual, sys.b) != value) rep.fail("optimal: weak duality gap");
  } else if (status == "infeasible") {
    if (!check_farkas(sys, vec(out.at("farkas").at("multipliers")), c.dim()))
      rep.fail("infeasible: bad Farkas certificate");
  } else if (status == "unbounded") {
    const RVector point = vec(out.at("point"));
    const RVector ray = vec(out.at("ray"));
    if (!sys.satisfies(point)) rep.fail("unbounded: point infeasible");
    if (!sys.maps_into_halfspaces(ray)) rep.fail("unbounded: ray leaves the feasible set");
    if (dot(c, ray) >= 0) rep.fail("unbounded: ray does not improve");
  } else {
    rep.fail("unknown status '" + status + "'");
  }
  return rep;
}

RecheckReport recheck_subset(const json& j) {
  RecheckReport rep;
  const System p{mat(j.at("P").at("A")), vec(j.at("P").at("b"))};
  const System qq{mat(j.at("Q").at("A")), vec(j.at("Q").at("b"))};
  check_subset_claim(p, qq, j.at("verdict"), "subset", rep);
  return rep;
}

RecheckReport recheck_disjointness(const json& j) {
  RecheckReport rep;
  auto cone = load_cone(j.at("cone"), rep);
  if (!cone) return rep;
  check_disjointness_claim(cone->rows, vec(j.at("x")), vec(j.at("y")), j.at("verdict"),
                           "disjointness", rep);
  return rep;
}

RecheckReport recheck_band_certificate(const json& j) {
  RecheckReport rep;
  auto cone = load_cone(j.at("cone"), rep);
  if (!cone) return rep;
  const RMatrix P = mat(j.at("projection"));
  const std::size_t n = P.rows();
  if (P.cols() != n || cone->rows.cols() != n) {
    rep.fail("projection shape mismatch");
    return rep;
  }
  if (P * P != P) rep.fail("projection not idempotent");

  const json& checks = j.at("checks");
  auto check_ok = [&checks](const char* name) {
    return checks.at(name).value("executed", false) && checks.at(name).value("ok", false);
  };

  if (!j.value("valid", false)) {
    // Invalid certificates must name a failing check and carry its witness.
    if (check_ok("order_projection") && check_ok("basis_decomposition") &&
        check_ok("directedness_range") && check_ok("directedness_kernel") &&
        check_ok("cross_disjointness") && check_ok("falsification_probes")) {
      rep.fail("certificate claims invalid but every check passed");
      return rep;
    }
    if (!check_ok("order_projection")) {
      const json& d = j.at("order_projection_detail");
      bool witnessed = false;
      for (const char* side : {"projection_positive", "complement_positive"}) {
        const json& pv = d.at(side);
        if (pv.value("positive", true)) continue;
        const std::size_t gi = pv.at("generator_index").get<std::size_t>();
        if (gi >= cone->generators.size()) {
          rep.fail("positivity witness: bad generator index");
          continue;
        }
        RMatrix op = P;
        if (std::string(side) == "complement_positive") op = RMatrix::identity(n) - P;
        const RVector image = op * cone->generators[gi];
        if (image != vec(pv.at("image"))) rep.fail("positivity witness: image mismatch");
        const std::size_t row = pv.at("violated_row").get<std::size_t>();
        if (row >= cone->rows.rows() || dot(cone->rows.row(row), image) >= 0)
          rep.fail("positivity witness: named row not violated");
        witnessed = true;
      }
      if (!witnessed) rep.fail("failed order-projection check without witness");
    } else if (!check_ok("cross_disjointness") && j.contains("cross_failure")) {
      const auto gi = j.at("cross_failure")[0].get<std::size_t>();
      const auto ki = j.at("cross_failure")[1].get<std::size_t>();
      const auto range_gens = vec_list(j.at("range_pos_gens"));
      const auto kernel_gens = vec_list(j.at("kernel_pos_gens"));
      bool found = false;
      for (const auto& pr : j.at("cross_pairs")) {
        if (pr.at("range_index") != gi || pr.at("kernel_index") != ki) continue;
        check_disjointness_claim(cone->rows, range_gens.at(gi), kernel_gens.at(ki),
                                 pr.at("verdict"), "cross_failure", rep);
        found = true;
      }
      if (!found) rep.fail("cross failure names a pair with no stored verdict");
    }
    return rep;
  }

  // Claimed valid: all six checks must have run and passed, and every claim
  // is re-derived from the stored data.
  for (const char* name : {"order_projection", "basis_decomposition", "directedness_range",
                           "directedness_kernel", "cross_disjointness",
                           "falsification_probes"})
    if (!check_ok(name)) rep.fail(std::string("valid certificate with failed check ") + name);

  const RMatrix Q = RMatrix::identity(n) - P;
  for (const auto& g : cone->generators) {
    if (!in_cone(*cone, P * g)) rep.fail("P not positive on a generator");
    if (!in_cone(*cone, Q * g)) rep.fail("I - P not positive on a generator");
  }

  const auto range_basis = vec_list(j.at("range_basis"));
  const auto kernel_basis = vec_list(j.at("kernel_basis"));
  for (const auto& v : range_basis)
    if (P * v != v) rep.fail("range basis vector not fixed by P");
  for (const auto& v : kernel_basis)
    if (!(P * v).is_zero()) rep.fail("kernel basis vector not annihilated by P");
  if (range_basis.size() + kernel_basis.size() != n)
    rep.fail("basis sizes do not sum to the dimension");
  std::vector<RVector> combined = range_basis;
  combined.insert(combined.end(), kernel_basis.begin(), kernel_basis.end());
  if (rank_of_vectors(combined) != n) rep.fail("range and kernel bases not independent");

  const auto range_gens = vec_list(j.at("range_pos_gens"));
  const auto kernel_gens = vec_list(j.at("kernel_pos_gens"));
  for (const auto& g : range_gens)
    if (!in_cone(*cone, g) || P * g != g) rep.fail("range positive generator invalid");
  for (const auto& h : kernel_gens)
    if (!in_cone(*cone, h) || !(P * h).is_zero()) rep.fail("kernel positive generator invalid");
  if (rank_of_vectors(range_gens) != range_basis.size())
    rep.fail("range positive generators do not span the range");
  if (rank_of_vectors(kernel_gens) != kernel_basis.size())
    rep.fail("kernel positive generators do not span the kernel");

  // cross disjointness: full pair coverage, every verdict true and proven
  std::map<std::pair<std::size_t, std::size_t>, const json*> pair_map;
  for (const auto& pr : j.at("cross_pairs"))
    pair_map[{pr.at("range_index").get<std::size_t>(),
              pr.at("kernel_index").get<std::size_t>()}] = &pr;
  for (std::size_t a = 0; a < range_gens.size(); ++a) {
    for (std::size_t b = 0; b < kernel_gens.size(); ++b) {
      auto it = pair_map.find({a, b});
      if (it == pair_map.end()) {
        rep.fail("missing cross pair verdict");
        continue;
      }
      const json& verdict = it->second->at("verdict");
      if (!verdict.value("disjoint", false)) {
        rep.fail("valid certificate with non-disjoint cross pair");
        continue;
      }
      check_disjointness_claim(cone->rows, range_gens[a], kernel_gens[b], verdict,
                               "cross_pair", rep);
    }
  }

  // probes
  const auto& records = j.at("probe_records");
  if (!kernel_basis.empty() &&
      records.size() != j.at("requested_probes").get<std::size_t>())
    rep.fail("probe record count does not match the request");
  for (const auto& r : records) {
    const RVector b = vec(r.at("range_part"));
    const RVector d = vec(r.at("kernel_part"));
    if (d.is_zero()) rep.fail("probe with zero kernel part");
    if (P * b != b) rep.fail("probe range part not in the range");
    if (!(P * d).is_zero()) rep.fail("probe kernel part not in the kernel");
    const std::size_t fg = r.at("failing_generator").get<std::size_t>();
    if (fg >= kernel_gens.size()) {
      rep.fail("probe names a bad generator");
      continue;
    }
    const json& failure = r.at("failure");
    if (failure.value("disjoint", true)) {
      rep.fail("probe failure verdict claims disjoint");
      continue;
    }
    check_disjointness_claim(cone->rows, b + d, kernel_gens[fg], failure, "probe", rep);
  }
  return rep;
}

}  // namespace ordercone::certcheck
