// JSON (de)serialization. Rationals render as "p/q" ("p" when q = 1)
// everywhere. canonical_dump + fnv1a64 give stable bytes and hashes for
// identical values across runs and platforms.
#pragma once

#include <nlohmann/json.hpp>

#include "ordercone/band.hpp"
#include "ordercone/cone.hpp"
#include "ordercone/genlab.hpp"
#include "ordercone/lp.hpp"
#include "ordercone/order.hpp"

namespace ordercone {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const RVector& v);
Json to_json(const RMatrix& m);
Json to_json(const ConeSpace& K);
Json to_json(const HPolyhedron& P);
Json to_json(const FarkasCertificate& c);
Json to_json(const LinearProgram& lp);
Json to_json(const LPOutcome& o);
Json to_json(const ValidityVerdict& v);
Json to_json(const OrderVerdict& v);
Json to_json(const SubsetVerdict& v);
Json to_json(const EqualityVerdict& v);
Json to_json(const DisjointnessVerdict& v);
Json to_json(const InfimumZeroVerdict& v);
Json to_json(const PositivityVerdict& v);
Json to_json(const OrderProjectionVerdict& v);
Json to_json(const BandCertificate& c);
Json to_json(const ImplicationVerdict& v);
Json to_json(const UniquenessVerdict& v);
Json to_json(const InstanceSpec& s);

Rational rational_from_json(const Json& j);
RVector rvector_from_json(const Json& j);
RMatrix rmatrix_from_json(const Json& j);
// Validates representation agreement when halfspaces are present;
// recomputes them when absent.
ConeSpace cone_from_json(const Json& j);
InstanceSpec instance_from_json(const Json& j);

// dump(2) with nlohmann's sorted object keys: canonical bytes.
std::string canonical_dump(const Json& j);

// FNV-1a 64-bit of the canonical bytes, as 16 hex digits.
std::string content_hash(const Json& j);

}  // namespace ordercone
