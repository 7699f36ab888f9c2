// Independent re-validation of serialized certificates. Works on raw JSON
// and uses nothing but rational arithmetic and rank computations: the LP
// solver, the double description engine and the order/band decision
// procedures are never invoked, so a passing recheck is evidence that the
// emitted witnesses stand on their own.
#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ordercone::certcheck {

struct RecheckReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(std::string what) {
    ok = false;
    problems.push_back(std::move(what));
  }
};

// {"lp": {"objective", "A", "b"}, "outcome": {"status", ...}}
RecheckReport recheck_lp_outcome(const nlohmann::json& j);

// {"P": {"A","b"}, "Q": {"A","b"}, "verdict": <SubsetVerdict>}
RecheckReport recheck_subset(const nlohmann::json& j);

// {"cone": {...}, "x": [...], "y": [...], "verdict": <DisjointnessVerdict>}
RecheckReport recheck_disjointness(const nlohmann::json& j);

// A full BandCertificate as emitted by to_json.
RecheckReport recheck_band_certificate(const nlohmann::json& j);

}  // namespace ordercone::certcheck
