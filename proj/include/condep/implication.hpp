#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "condep/attribute_set.hpp"
#include "condep/dependency.hpp"

namespace condep {

/// A set Σ of Z-EMVDs X ↠ Y|Z sharing one fixed third component Z.
class ZEmvdSet {
public:
  ZEmvdSet() = default;
  /// Throws ValidationError unless every statement's second component is
  /// `z` and its lhs and first component are disjoint from `z`.
  ZEmvdSet(AttributeSet z, std::vector<DependencyStatement> statements);

  const AttributeSet& z() const noexcept { return z_; }
  const std::vector<DependencyStatement>& statements() const noexcept { return statements_; }
  std::size_t size() const noexcept { return statements_.size(); }

  /// Σ with the statement at `index` removed.
  ZEmvdSet without(std::size_t index) const;

  /// Every attribute mentioned, Z included.
  AttributeSet attributes() const;

private:
  AttributeSet z_;
  std::vector<DependencyStatement> statements_;
};

/// Parses a Z-EMVD set file: a `Z: <attrs or _>` line followed by one
/// statement per line whose third component equals the declared Z. `#`
/// comments and blank lines are skipped.
ZEmvdSet parse_zemvd_set(std::string_view text, const std::string& source = "<input>");

/// Plain statement list (one per line) with an optional leading `Z:` line,
/// used where Σ need not share a third component.
std::vector<DependencyStatement> parse_statement_list(std::string_view text,
                                                      const std::string& source = "<input>");

std::string read_text_file(const std::string& path);

// ---------------------------------------------------------------------------
// The implication graph G_Σ and its cover.
//
// Nodes are attribute sets disjoint from Z. There is a subset arc [W] → [V]
// whenever V ⊆ W, and each X′ ↠ Y′|Z in Σ contributes the arc [X′] → [X′Y′].
// X ↠ Y|Z is in the cover iff [XY] is reachable from [X].
// ---------------------------------------------------------------------------

enum class ArcKind { Subset, Sigma };

struct CoverArc {
  AttributeSet from;
  AttributeSet to;
  ArcKind kind = ArcKind::Subset;
  /// Index into Σ for Sigma arcs.
  std::size_t statement = 0;
};

struct CoverResult {
  bool contained = false;
  /// Arcs from [X] to [XY] when contained; empty for trivial queries.
  std::vector<CoverArc> path;

  /// Nodes visited along the path, starting at [X].
  std::vector<AttributeSet> nodes() const;
};

/// Decides X ↠ Y|Z ∈ cover(Σ) for the query `source` ↠ `target` | Σ.z.
/// Throws ValidationError if source, target and Z are not pairwise disjoint.
CoverResult cover_contains(const ZEmvdSet& sigma, const AttributeSet& source,
                           const AttributeSet& target);

/// Same, taking the query as a statement whose second component must be Σ.z.
CoverResult cover_contains(const ZEmvdSet& sigma, const DependencyStatement& query);

/// True iff every arc is a legal subset or Σ step and consecutive arcs
/// connect.
bool is_valid_cover_path(const ZEmvdSet& sigma, const std::vector<CoverArc>& path);

// ---------------------------------------------------------------------------
// Symmetry, augmentation and projection.
// ---------------------------------------------------------------------------

enum class Axiom { Symmetry, Augmentation, Projection };

std::string_view to_string(Axiom axiom);

/// X ↠ Y|Z ⟹ X ↠ Z|Y.
DependencyStatement apply_symmetry(const DependencyStatement& s);

/// X ↠ Y|ZW ⟹ XW ↠ Y|Z. `moved` must be a subset of s.second.
DependencyStatement apply_augmentation(const DependencyStatement& s, const AttributeSet& moved);

/// X ↠ Y|Z ⟹ X ↠ Y′|Z′ for Y′ ⊆ Y, Z′ ⊆ Z.
DependencyStatement apply_projection(const DependencyStatement& s, const AttributeSet& keep_first,
                                     const AttributeSet& keep_second);

struct DerivationStep {
  Axiom axiom = Axiom::Symmetry;
  /// Augmentation: the moved set W. Projection: Y′.
  AttributeSet first_parameter;
  /// Projection: Z′.
  AttributeSet second_parameter;
  DependencyStatement result;
};

struct Derivation {
  DependencyStatement source;
  std::vector<DerivationStep> steps;

  const DependencyStatement& conclusion() const {
    return steps.empty() ? source : steps.back().result;
  }
};

/// Re-applies every step from the source; throws ValidationError if any
/// step's recorded result differs from the axiom's output.
DependencyStatement replay(const Derivation& derivation);

/// The least set containing `s` and closed under the three axioms.
/// ResourceError past `max_size` members.
std::set<DependencyStatement> axiom_closure(const DependencyStatement& s,
                                            std::size_t max_size = 1u << 20);

/// Shortest derivation of `target` from `source` by the three axioms, if any.
std::optional<Derivation> derive(const DependencyStatement& source,
                                 const DependencyStatement& target,
                                 std::size_t max_size = 1u << 20);

struct ImplicationOptions {
  /// Cap on candidate cover members examined.
  std::size_t max_candidates = 1u << 16;
  /// Cap on a single closure's size.
  std::size_t max_closure = 1u << 20;
};

struct ImplicationResult {
  bool implied = false;
  /// The cover member the target is derived from, its reachability
  /// witness, and the derivation.
  std::optional<DependencyStatement> witness;
  CoverResult cover;
  std::optional<Derivation> derivation;
  std::size_t candidates_examined = 0;
};

/// Decides whether the nontrivial EMVD `target` is implied by Σ: some σ in
/// cover(Σ) has target ∈ axiom_closure(σ). Candidate σ range over queries
/// whose components are unions of atoms, the classes of attributes outside
/// Z that no statement of Σ or target separates. Among the candidates that
/// work, the one with the shortest derivation is reported.
ImplicationResult lemma3_implies(const ZEmvdSet& sigma, const DependencyStatement& target,
                                 const ImplicationOptions& options = {});

// ---------------------------------------------------------------------------
// The cyclic family Σ⁽ⁿ⁾: X_i ↠ X_{i+1}|Z with indices mod n.
// ---------------------------------------------------------------------------

struct SigmaN {
  std::size_t n = 0;
  std::vector<AttributeSet> blocks;
  AttributeSet z;
  ZEmvdSet sigma;

  const AttributeSet& block(std::ptrdiff_t i) const;
  /// X_i ↠ X_j | Z.
  DependencyStatement statement(std::ptrdiff_t i, std::ptrdiff_t j) const;
};

/// Blocks X_i hold attributes X<i>a, X<i>b, ...; Z holds Z0, Z1, ....
/// Requires n ≥ 2 and sizes ≥ 1; ResourceError when the attribute count
/// passes 4096.
SigmaN build_sigma_n(std::size_t n, std::size_t block_size = 1, std::size_t z_size = 1);

} // namespace condep
