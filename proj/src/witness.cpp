#include "condep/witness.hpp"

#include <bit>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "condep/error.hpp"
#include "condep/relation_io.hpp"

namespace condep {

namespace {

// Subsets are bitmasks over the tuple space.
constexpr std::size_t kMaskBits = 63;

bool satisfies(const ClassicRelation& r, const DependencyStatement& s, MvdMethod method) {
  return check_emvd(r, s, method);
}

} // namespace

void SearchBounds::validate() const {
  if (domain_size == 0 || max_tuples == 0 || max_candidates == 0 || max_tuple_space == 0)
    throw ValidationError("search bounds must all be positive");
}

std::vector<Row> tuple_space(const AttributeSet& schema, const SearchBounds& bounds) {
  bounds.validate();
  std::size_t size = 1;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (size > bounds.max_tuple_space / bounds.domain_size)
      throw ResourceError("tuple space of " + std::to_string(bounds.domain_size) + "^" +
                          std::to_string(schema.size()) + " tuples exceeds the cap of " +
                          std::to_string(bounds.max_tuple_space));
    size *= bounds.domain_size;
  }
  std::vector<Row> out;
  out.reserve(size);
  Row row(schema.size(), "0");
  std::vector<std::size_t> digits(schema.size(), 0);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < schema.size(); ++i) row[i] = std::to_string(digits[i]);
    out.push_back(row);
    for (std::size_t i = schema.size(); i-- > 0;) {
      if (++digits[i] < bounds.domain_size) break;
      digits[i] = 0;
    }
  }
  return out;
}

RelationEnumerator::RelationEnumerator(AttributeSet schema, SearchBounds bounds)
    : schema_(std::move(schema)), bounds_(bounds), space_(tuple_space(schema_, bounds_)) {
  if (space_.size() > kMaskBits)
    throw ResourceError("tuple space of " + std::to_string(space_.size()) +
                        " tuples exceeds the enumerator's limit of " + std::to_string(kMaskBits));
}

std::optional<ClassicRelation> RelationEnumerator::next() {
  if (done_) return std::nullopt;
  const std::uint64_t limit = std::uint64_t{1} << space_.size();
  std::uint64_t m = mask_ + 1;
  // Every mask in [m, m + lowbit(m)) keeps m's bits, so none can drop back
  // under the size limit.
  while (m < limit && static_cast<std::size_t>(std::popcount(m)) > bounds_.max_tuples)
    m += m & (~m + 1);
  if (m >= limit) {
    done_ = true;
    return std::nullopt;
  }
  if (produced_ >= bounds_.max_candidates) return std::nullopt;
  mask_ = m;
  ++produced_;
  std::set<Row> rows;
  for (std::size_t i = 0; i < space_.size(); ++i)
    if (m & (std::uint64_t{1} << i)) rows.insert(rows.end(), space_[i]);
  return ClassicRelation(schema_, std::move(rows));
}

std::vector<ClassicRelation> enumerate_relations(const AttributeSet& schema,
                                                 const SearchBounds& bounds) {
  RelationEnumerator e(schema, bounds);
  std::vector<ClassicRelation> out;
  while (auto r = e.next()) out.push_back(std::move(*r));
  return out;
}

std::string_view to_string(WitnessOutcome outcome) {
  switch (outcome) {
  case WitnessOutcome::Counterexample: return "counterexample";
  case WitnessOutcome::Exhausted: return "exhausted";
  case WitnessOutcome::SatisfiedAll: return "satisfied_all";
  }
  return "?";
}

WitnessReport find_witness(const std::vector<DependencyStatement>& sigma,
                           const DependencyStatement& target, const SearchBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  AttributeSet universe = target.attributes();
  for (const auto& s : sigma) universe = universe.unite(s.attributes());

  WitnessReport report;
  RelationEnumerator enumerator(universe, bounds);
  while (auto r = enumerator.next()) {
    ++report.candidates;
    bool holds = true;
    for (const auto& s : sigma) {
      if (!satisfies(*r, s, MvdMethod::Definition)) {
        holds = false;
        break;
      }
    }
    if (!holds) continue;
    ++report.satisfying_sigma;
    if (satisfies(*r, target, MvdMethod::Definition)) continue;

    // Re-check through the counting characterization before reporting.
    for (const auto& s : sigma)
      if (!satisfies(*r, s, MvdMethod::Lemma2))
        throw std::logic_error("counterexample re-check failed on " + s.str());
    if (satisfies(*r, target, MvdMethod::Lemma2))
      throw std::logic_error("counterexample re-check failed on target " + target.str());
    report.outcome = WitnessOutcome::Counterexample;
    report.counterexample = std::move(*r);
    break;
  }
  if (!report.counterexample)
    report.outcome =
        enumerator.exhausted() ? WitnessOutcome::Exhausted : WitnessOutcome::SatisfiedAll;
  report.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

WeightedRelation random_distribution(const AttributeSet& schema, const SearchBounds& bounds) {
  const auto space = tuple_space(schema, bounds);
  std::mt19937_64 rng(bounds.seed);
  std::vector<std::int64_t> raw;
  raw.reserve(space.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    raw.push_back(1 + static_cast<std::int64_t>(rng() % 100));
    total += raw.back();
  }
  WeightedRelation::RowMap rows;
  for (std::size_t i = 0; i < space.size(); ++i) rows.emplace(space[i], Rational(raw[i], total));
  return WeightedRelation(schema, std::move(rows));
}

nlohmann::json to_json(const ClassicRelation& relation) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : relation.rows()) rows.push_back(row);
  return {{"schema", relation.schema().names()}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const WitnessReport& report, bool with_timing) {
  nlohmann::json j{{"outcome", to_string(report.outcome)},
                   {"candidates", report.candidates},
                   {"satisfying_sigma", report.satisfying_sigma}};
  if (report.counterexample) j["counterexample"] = to_json(*report.counterexample);
  if (report.outcome != WitnessOutcome::Counterexample)
    j["note"] = "no counterexample within bounds; this is not a proof of implication";
  if (with_timing) j["millis"] = report.millis;
  return j;
}

std::string to_text(const WitnessReport& report, bool with_timing) {
  std::ostringstream out;
  out << "outcome: " << to_string(report.outcome) << "\n"
      << "candidates examined: " << report.candidates << "\n"
      << "candidates satisfying sigma: " << report.satisfying_sigma << "\n";
  if (with_timing) out << "elapsed: " << report.millis << " ms\n";
  if (report.counterexample) {
    out << "counterexample (satisfies sigma, violates the target):\n"
        << format_relation(WeightedRelation::constant(*report.counterexample));
  } else {
    out << "no counterexample within bounds; this is not a proof of implication\n";
  }
  return out.str();
}

} // namespace condep
