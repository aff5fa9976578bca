#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "condep/dependency.hpp"
#include "condep/relation.hpp"

namespace condep {

struct SearchBounds {
  /// Values per attribute: "0", "1", ..., domain_size-1.
  std::size_t domain_size = 2;
  /// Largest support enumerated.
  std::size_t max_tuples = 4;
  /// Enumeration stops after this many relations.
  std::size_t max_candidates = 1'000'000;
  std::uint64_t seed = 0x5eed;
  /// Largest tuple space (domain_size^|schema|) accepted. The enumerator
  /// itself stops at 63 tuples.
  std::size_t max_tuple_space = 63;

  /// ValidationError unless every field is positive.
  void validate() const;
};

/// All value vectors over `schema` in canonical order (lexicographic over
/// the canonical attribute order, values 0..d-1 as decimal text).
/// ResourceError when the space exceeds bounds.max_tuple_space.
std::vector<Row> tuple_space(const AttributeSet& schema, const SearchBounds& bounds);

/// Deterministic stream of nonempty relations over `schema` with at most
/// bounds.max_tuples rows. Subsets of the tuple space come in increasing
/// binary-counter order (tuple i ↔ bit i) with oversized subsets skipped,
/// and the stream ends after bounds.max_candidates relations.
class RelationEnumerator {
public:
  RelationEnumerator(AttributeSet schema, SearchBounds bounds);

  std::optional<ClassicRelation> next();

  /// True once every subset within max_tuples was produced, i.e. the stream
  /// did not stop at max_candidates.
  bool exhausted() const noexcept { return done_; }
  std::size_t produced() const noexcept { return produced_; }
  std::size_t space_size() const noexcept { return space_.size(); }

private:
  AttributeSet schema_;
  SearchBounds bounds_;
  std::vector<Row> space_;
  std::uint64_t mask_ = 0;
  std::size_t produced_ = 0;
  bool done_ = false;
};

/// Collects the whole stream.
std::vector<ClassicRelation> enumerate_relations(const AttributeSet& schema,
                                                 const SearchBounds& bounds);

enum class WitnessOutcome {
  /// A relation satisfying Σ and violating the target was found.
  Counterexample,
  /// The whole bounded space was searched without a counterexample. This
  /// is not a proof of implication.
  Exhausted,
  /// The search stopped at max_candidates; every relation examined
  /// satisfied the implication.
  SatisfiedAll,
};

std::string_view to_string(WitnessOutcome outcome);

struct WitnessReport {
  WitnessOutcome outcome = WitnessOutcome::Exhausted;
  std::optional<ClassicRelation> counterexample;
  std::size_t candidates = 0;
  std::size_t satisfying_sigma = 0;
  double millis = 0.0;
};

/// Searches relations over the attributes of Σ and the target (every
/// statement read as an EMVD) for one that satisfies Σ but violates the
/// target. The reported counterexample is the first in canonical order and
/// is re-verified with an independent MVD test before it is returned.
WitnessReport find_witness(const std::vector<DependencyStatement>& sigma,
                           const DependencyStatement& target, const SearchBounds& bounds);

/// Strictly positive weights over the whole tuple space, normalized to
/// total 1, determined by bounds.seed.
WeightedRelation random_distribution(const AttributeSet& schema, const SearchBounds& bounds);

nlohmann::json to_json(const ClassicRelation& relation);
nlohmann::json to_json(const WitnessReport& report, bool with_timing);
std::string to_text(const WitnessReport& report, bool with_timing);

} // namespace condep
