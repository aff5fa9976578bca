#include "condep/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "condep/error.hpp"

namespace condep {

namespace {

template <typename F>
VerdictRecord timed(std::string group, std::string claim, F&& check) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord record{std::move(group), std::move(claim), false, {}, 0.0};
  std::tie(record.holds, record.witness) = check();
  record.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

// Nontrivial cover members S ↠ T|Z with S, T disjoint unions of blocks.
std::vector<std::pair<std::size_t, std::size_t>> block_cover(const SigmaN& family,
                                                             const ZEmvdSet& sigma) {
  std::vector<std::pair<std::size_t, std::size_t>> members; // (source mask, target mask)
  const std::size_t n = family.n;
  // Each block goes to the source, the target, or neither: 3^n assignments.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code, source_mask = 0, target_mask = 0;
    AttributeSet source, target;
    for (std::size_t i = 0; i < n; ++i, rest /= 3) {
      if (rest % 3 == 1) {
        source_mask |= std::size_t{1} << i;
        source = source.unite(family.blocks[i]);
      } else if (rest % 3 == 2) {
        target_mask |= std::size_t{1} << i;
        target = target.unite(family.blocks[i]);
      }
    }
    if (target.empty()) continue;
    if (cover_contains(sigma, source, target).contained)
      members.emplace_back(source_mask, target_mask);
  }
  std::sort(members.begin(), members.end());
  return members;
}

} // namespace

std::string format_path(const CoverResult& cover) {
  if (cover.path.empty()) return "(trivial)";
  std::string out = "[" + cover.path.front().from.str() + "]";
  for (const auto& arc : cover.path)
    out += std::string(arc.kind == ArcKind::Sigma ? " => " : " -> ") + "[" + arc.to.str() + "]";
  return out;
}

std::string format_derivation(const Derivation& derivation) {
  std::string out = derivation.source.str();
  for (const auto& step : derivation.steps) {
    out += "\n  by ";
    out += to_string(step.axiom);
    if (step.axiom == Axiom::Augmentation) out += " W=" + step.first_parameter.str();
    if (step.axiom == Axiom::Projection)
      out += " Y'=" + step.first_parameter.str() + " Z'=" + step.second_parameter.str();
    out += ": " + step.result.str();
  }
  return out;
}

NonaxiomatizabilityReport nonaxiomatizability_report(std::size_t n, std::size_t block_size,
                                                     std::size_t z_size) {
  if (n < 3) throw ValidationError("the report needs n ≥ 3");
  if (n > 16) throw ResourceError("the report enumerates 3^n block queries; n > 16 refused");
  const SigmaN family = build_sigma_n(n, block_size, z_size);
  const auto last = static_cast<std::ptrdiff_t>(n - 1);
  const auto goal = family.statement(0, last);

  NonaxiomatizabilityReport report;
  report.n = n;

  report.records.push_back(timed("property1", goal.str() + " is in the cover of Sigma(" +
                                                  std::to_string(n) + ")",
                                 [&] {
                                   const auto cover = cover_contains(family.sigma, goal);
                                   report.property1_path_arcs = cover.path.size();
                                   const bool ok = cover.contained &&
                                                   is_valid_cover_path(family.sigma, cover.path);
                                   return std::make_pair(
                                       ok, format_path(cover) + " (" +
                                               std::to_string(cover.path.size()) + " arcs)");
                                 }));

  for (std::size_t k = 0; k < n; ++k) {
    const ZEmvdSet reduced = family.sigma.without(k);
    const std::string removed = family.sigma.statements()[k].str();
    for (std::size_t i = 0; i < n; ++i) {
      const auto back = family.statement(static_cast<std::ptrdiff_t>(i + 1),
                                         static_cast<std::ptrdiff_t>(i));
      report.records.push_back(
          timed("property2", back.str() + " is not in the cover of Sigma(" + std::to_string(n) +
                                 ") without " + removed,
                [&] {
                  const auto cover = cover_contains(reduced, back);
                  return std::make_pair(!cover.contained,
                                        cover.contained ? format_path(cover) : "no path");
                }));
    }
    report.records.push_back(timed(
        "property2", "the block-level cover of Sigma(" + std::to_string(n) + ") without " +
                         removed + " is exactly its remaining statements",
        [&] {
          std::vector<std::pair<std::size_t, std::size_t>> expected;
          for (std::size_t i = 0; i < n; ++i)
            if (i != k) expected.emplace_back(std::size_t{1} << i, std::size_t{1} << ((i + 1) % n));
          std::sort(expected.begin(), expected.end());
          const auto found = block_cover(family, reduced);
          return std::make_pair(found == expected, std::to_string(found.size()) +
                                                       " nontrivial block-level members");
        }));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& sigma_i = family.sigma.statements()[i];
    report.records.push_back(timed("nonderivable",
                                   goal.str() + " is not derivable from " + sigma_i.str(), [&] {
                                     const auto closure = axiom_closure(sigma_i);
                                     return std::make_pair(closure.count(goal) == 0,
                                                           "closure of " +
                                                               std::to_string(closure.size()) +
                                                               " statements");
                                   }));
  }

  report.all_pass = std::all_of(report.records.begin(), report.records.end(),
                                [](const auto& r) { return r.holds; });
  std::ostringstream summary;
  if (report.all_pass) {
    summary << "Sigma(" << n << ") implies " << goal.str()
            << ", yet no single statement of it yields that conclusion by symmetry, "
               "augmentation and projection, and every proper subset implies only what its "
               "members yield. An axiom system with fewer than "
            << n
            << " premises per rule cannot derive it, so no finite axiomatization of EMVDs is "
               "complete.";
  } else {
    summary << "FAILED: at least one verdict for Sigma(" << n << ") did not hold.";
  }
  report.summary = summary.str();
  return report;
}

nlohmann::json to_json(const CoverArc& arc) {
  nlohmann::json j{{"from", arc.from.str()},
                   {"to", arc.to.str()},
                   {"kind", arc.kind == ArcKind::Sigma ? "sigma" : "subset"}};
  if (arc.kind == ArcKind::Sigma) j["statement"] = arc.statement;
  return j;
}

nlohmann::json to_json(const Derivation& derivation) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : derivation.steps) {
    nlohmann::json s{{"axiom", to_string(step.axiom)}, {"result", step.result.str()}};
    if (step.axiom == Axiom::Augmentation) s["moved"] = step.first_parameter.str();
    if (step.axiom == Axiom::Projection) {
      s["keep_first"] = step.first_parameter.str();
      s["keep_second"] = step.second_parameter.str();
    }
    steps.push_back(std::move(s));
  }
  return {{"source", derivation.source.str()}, {"steps", std::move(steps)}};
}

nlohmann::json to_json(const VerdictRecord& record, bool with_timing) {
  nlohmann::json j{{"group", record.group},
                   {"claim", record.claim},
                   {"verdict", record.holds ? "holds" : "fails"},
                   {"witness", record.witness}};
  if (with_timing) j["millis"] = record.millis;
  return j;
}

nlohmann::json to_json(const NonaxiomatizabilityReport& report, bool with_timing) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) records.push_back(to_json(r, with_timing));
  return {{"n", report.n},
          {"all_pass", report.all_pass},
          {"property1_path_arcs", report.property1_path_arcs},
          {"records", std::move(records)},
          {"summary", report.summary}};
}

std::string to_text(const NonaxiomatizabilityReport& report, bool with_timing) {
  std::ostringstream out;
  out << "Sigma(" << report.n << ") non-axiomatizability report\n";
  for (const auto& r : report.records) {
    out << (r.holds ? "[holds] " : "[FAILS] ") << r.group << ": " << r.claim;
    if (with_timing) out << " (" << r.millis << " ms)";
    out << "\n";
    if (r.group == "property1" || !r.holds) out << "    " << r.witness << "\n";
  }
  out << report.summary << "\n";
  return out.str();
}

} // namespace condep
