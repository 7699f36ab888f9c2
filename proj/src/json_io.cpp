#include "ordercone/json_io.hpp"

#include <algorithm>

#include "ordercone/dd.hpp"

namespace ordercone {

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const RVector& v) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(format_rational(v[i]));
  return arr;
}

Json to_json(const RMatrix& m) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
  return arr;
}

Json to_json(const ConeSpace& K) {
  Json gens = Json::array();
  for (const auto& g : K.generators()) gens.push_back(to_json(g));
  return Json{{"dim", K.dim()}, {"generators", gens}, {"halfspaces", to_json(K.halfspaces())}};
}

Json to_json(const HPolyhedron& P) {
  return Json{{"A", to_json(P.A)}, {"b", to_json(P.b)}};
}

Json to_json(const FarkasCertificate& c) {
  return Json{{"multipliers", to_json(c.multipliers)}};
}

Json to_json(const LinearProgram& lp) {
  return Json{{"objective", to_json(lp.objective)}, {"A", to_json(lp.A)}, {"b", to_json(lp.b)}};
}

Json to_json(const LPOutcome& o) {
  Json j;
  switch (o.status) {
    case LPStatus::optimal: j["status"] = "optimal"; break;
    case LPStatus::infeasible: j["status"] = "infeasible"; break;
    case LPStatus::unbounded: j["status"] = "unbounded"; break;
  }
  if (o.value) j["value"] = format_rational(*o.value);
  if (o.point) j["point"] = to_json(*o.point);
  if (o.dual) j["dual"] = to_json(*o.dual);
  if (o.ray) j["ray"] = to_json(*o.ray);
  if (o.farkas) j["farkas"] = to_json(*o.farkas);
  return j;
}

Json to_json(const ValidityVerdict& v) {
  Json j{{"valid", v.valid}};
  if (v.multipliers) j["multipliers"] = to_json(*v.multipliers);
  if (v.empty) j["empty"] = to_json(*v.empty);
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const OrderVerdict& v) {
  Json j{{"holds", v.holds}};
  if (v.violated_row) j["violated_row"] = *v.violated_row;
  return j;
}

Json to_json(const SubsetVerdict& v) {
  Json j{{"subset", v.subset}};
  if (v.failed_row) j["failed_row"] = *v.failed_row;
  if (v.witness) j["witness"] = to_json(*v.witness);
  Json proofs = Json::array();
  for (const auto& p : v.proofs) {
    Json e = to_json(p.verdict);
    e["row"] = p.row;
    proofs.push_back(std::move(e));
  }
  j["proofs"] = std::move(proofs);
  return j;
}

Json to_json(const EqualityVerdict& v) {
  Json j{{"equal", v.equal}, {"forward", to_json(v.forward)}};
  if (v.backward) j["backward"] = to_json(*v.backward);
  return j;
}

Json to_json(const DisjointnessVerdict& v) {
  Json j{{"disjoint", v.disjoint}, {"detail", to_json(v.detail)}};
  if (v.direction_failed)
    j["direction_failed"] = *v.direction_failed == DisjointFailureDirection::u1_not_subset_u2
                                ? "u1_not_subset_u2"
                                : "u2_not_subset_u1";
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const InfimumZeroVerdict& v) {
  Json j{{"zero_infimum", v.zero_infimum}, {"detail", to_json(v.detail)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const PositivityVerdict& v) {
  Json j{{"positive", v.positive}};
  if (v.generator_index) j["generator_index"] = *v.generator_index;
  if (v.image) j["image"] = to_json(*v.image);
  if (v.violated_row) j["violated_row"] = *v.violated_row;
  return j;
}

Json to_json(const OrderProjectionVerdict& v) {
  return Json{{"order_projection", v.order_projection},
              {"projection_positive", to_json(v.projection_positive)},
              {"complement_positive", to_json(v.complement_positive)},
              {"renderings_agree", v.renderings_agree}};
}

namespace {

Json vectors_to_json(const std::vector<RVector>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

Json check_to_json(const BandCertificate::Check& c) {
  return Json{{"executed", c.executed}, {"ok", c.ok}};
}

}  // namespace

Json to_json(const BandCertificate& c) {
  Json j{{"cone", to_json(c.cone)},
         {"projection", to_json(c.projection.matrix())},
         {"seed", c.seed},
         {"requested_probes", c.requested_probes},
         {"valid", c.valid()},
         {"checks",
          Json{{"order_projection", check_to_json(c.order_projection)},
               {"basis_decomposition", check_to_json(c.basis_decomposition)},
               {"directedness_range", check_to_json(c.directedness_range)},
               {"directedness_kernel", check_to_json(c.directedness_kernel)},
               {"cross_disjointness", check_to_json(c.cross_disjointness)},
               {"falsification_probes", check_to_json(c.falsification_probes)}}},
         {"order_projection_detail", to_json(c.order_projection_detail)},
         {"range_basis", vectors_to_json(c.range_basis)},
         {"kernel_basis", vectors_to_json(c.kernel_basis)},
         {"range_pos_gens", vectors_to_json(c.range_pos_gens)},
         {"kernel_pos_gens", vectors_to_json(c.kernel_pos_gens)}};
  Json pairs = Json::array();
  for (const auto& p : c.cross_pairs)
    pairs.push_back(Json{{"range_index", p.range_index},
                         {"kernel_index", p.kernel_index},
                         {"verdict", to_json(p.verdict)}});
  j["cross_pairs"] = std::move(pairs);
  if (c.cross_failure)
    j["cross_failure"] = Json::array({c.cross_failure->first, c.cross_failure->second});
  Json probes = Json::array();
  for (const auto& r : c.probe_records)
    probes.push_back(Json{{"range_part", to_json(r.range_part)},
                          {"kernel_part", to_json(r.kernel_part)},
                          {"failing_generator", r.failing_generator},
                          {"failure", to_json(r.failure)}});
  j["probe_records"] = std::move(probes);
  if (c.failed_probe) j["failed_probe"] = *c.failed_probe;
  if (c.failed_probe_vector) j["failed_probe_vector"] = to_json(*c.failed_probe_vector);
  return j;
}

Json to_json(const ImplicationVerdict& v) {
  return Json{{"hypothesis", v.hypothesis},
              {"conclusion", v.conclusion},
              {"holds", v.holds},
              {"x_positive", to_json(v.x_positive)},
              {"y_positive", to_json(v.y_positive)},
              {"z_positive", to_json(v.z_positive)},
              {"yz_disjoint", to_json(v.yz_disjoint)}};
}

Json to_json(const UniquenessVerdict& v) {
  return Json{{"p_order_projection", v.p_order_projection},
              {"q_order_projection", v.q_order_projection},
              {"same_range", v.same_range},
              {"applicable", v.applicable},
              {"equal", v.equal},
              {"holds", v.holds}};
}

Json to_json(const InstanceSpec& s) {
  Json j{{"kind", s.kind}, {"params", s.params}, {"seed", s.seed}, {"cone", to_json(s.cone)}};
  if (s.projection) j["projection"] = to_json(s.projection->matrix());
  if (!s.vectors.empty()) j["vectors"] = vectors_to_json(s.vectors);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw std::invalid_argument("rational: expected string");
  return parse_rational(j.get<std::string>());
}

RVector rvector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected array");
  RVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

RMatrix rmatrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected array of rows");
  if (j.empty()) return RMatrix();
  RMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) m.set_row(i, rvector_from_json(j[i]));
  return m;
}

ConeSpace cone_from_json(const Json& j) {
  if (!j.contains("generators")) throw std::invalid_argument("cone: missing generators");
  std::vector<RVector> gens;
  for (const auto& g : j.at("generators")) gens.push_back(rvector_from_json(g));
  if (j.contains("dim") && !gens.empty() && gens.front().dim() != j.at("dim").get<std::size_t>())
    throw std::invalid_argument("cone: dim does not match generators");
  ConeSpace cone = ConeSpace::from_generators(std::move(gens));
  if (j.contains("halfspaces") && !j.at("halfspaces").is_null()) {
    // The given system must describe the same cone; compare its extreme
    // rays against the canonical generators.
    const RMatrix given = rmatrix_from_json(j.at("halfspaces"));
    std::vector<RVector> given_rays;
    try {
      given_rays = hrep_to_vrep(given);
    } catch (const NotPointedError&) {
      throw ConeError(ConeError::Kind::representation_mismatch,
                      "halfspaces describe a non-pointed cone");
    }
    if (given_rays != cone.generators())
      throw ConeError(ConeError::Kind::representation_mismatch,
                      "generators and halfspaces describe different cones");
  }
  return cone;
}

InstanceSpec instance_from_json(const Json& j) {
  InstanceSpec s{.kind = j.at("kind").get<std::string>(),
                 .params = {},
                 .seed = j.value("seed", std::uint64_t{0}),
                 .cone = cone_from_json(j.at("cone")),
                 .projection = std::nullopt,
                 .vectors = {}};
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) s.params[k] = v.get<std::int64_t>();
  if (j.contains("projection") && !j.at("projection").is_null())
    s.projection = ProjectionMatrix(rmatrix_from_json(j.at("projection")));
  if (j.contains("vectors"))
    for (const auto& v : j.at("vectors")) s.vectors.push_back(rvector_from_json(v));
  return s;
}

std::string canonical_dump(const Json& j) { return j.dump(2); }

std::string content_hash(const Json& j) {
  const std::string bytes = canonical_dump(j);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace ordercone
