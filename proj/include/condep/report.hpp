#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "condep/implication.hpp"

namespace condep {

/// One checked claim. `holds` is whether the claim was confirmed.
struct VerdictRecord {
  std::string group;
  std::string claim;
  bool holds = false;
  /// Reachability path, derivation trace, or explanation.
  std::string witness;
  double millis = 0.0;
};

struct NonaxiomatizabilityReport {
  std::size_t n = 0;
  std::vector<VerdictRecord> records;
  bool all_pass = false;
  std::string summary;
  /// Arc count of the path witnessing X_0 ↠ X_{n-1}|Z.
  std::size_t property1_path_arcs = 0;
};

/// Checks, for Σ⁽ⁿ⁾ (n ≥ 3):
///  - property1: X_0 ↠ X_{n-1}|Z lies in the cover, with its path;
///  - property2: for each leave-one-out Σ′ and each i, X_{i+1} ↠ X_i|Z is
///    not in cover(Σ′), and the nontrivial cover members whose components
///    are unions of blocks are exactly Σ′;
///  - nonderivable: X_0 ↠ X_{n-1}|Z is outside the axiom closure of every
///    single σ ∈ Σ⁽ⁿ⁾.
NonaxiomatizabilityReport nonaxiomatizability_report(std::size_t n, std::size_t block_size = 1,
                                                     std::size_t z_size = 1);

/// `[X0] -> [X0,X1] -> [X1]`; Σ arcs are drawn `=>`.
std::string format_path(const CoverResult& cover);
std::string format_derivation(const Derivation& derivation);

nlohmann::json to_json(const CoverArc& arc);
nlohmann::json to_json(const Derivation& derivation);
nlohmann::json to_json(const VerdictRecord& record, bool with_timing);
nlohmann::json to_json(const NonaxiomatizabilityReport& report, bool with_timing);

std::string to_text(const NonaxiomatizabilityReport& report, bool with_timing);

} // namespace condep
