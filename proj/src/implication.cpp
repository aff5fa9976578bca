#include "condep/implication.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "condep/error.hpp"
#include "condep/relation_io.hpp"

namespace condep {

namespace {

constexpr std::size_t kMaxSigmaAttributes = 4096;

DependencyStatement as_emvd(DependencyStatement s) {
  s.kind = DependencyKind::EMVD;
  return s;
}

struct Parent {
  DependencyStatement from;
  DerivationStep step;
};

// Breadth-first saturation under the three axioms. Returns the parent of
// every statement reached (the source maps to nullopt). Stops early once
// `stop_at` is reached.
std::map<DependencyStatement, std::optional<Parent>>
saturate(const DependencyStatement& source, std::size_t max_size,
         const std::optional<DependencyStatement>& stop_at) {
  std::map<DependencyStatement, std::optional<Parent>> seen;
  std::deque<DependencyStatement> queue;
  const auto root = as_emvd(source);
  seen.emplace(root, std::nullopt);
  queue.push_back(root);

  const auto visit = [&](const DependencyStatement& from, DerivationStep step) {
    if (seen.count(step.result)) return false;
    if (seen.size() >= max_size)
      throw ResourceError("axiom closure exceeds " + std::to_string(max_size) + " statements");
    queue.push_back(step.result);
    const bool hit = stop_at && step.result == *stop_at;
    DependencyStatement key = step.result;
    seen.emplace(std::move(key), Parent{from, std::move(step)});
    return hit;
  };

  if (stop_at && root == *stop_at) return seen;
  while (!queue.empty()) {
    const DependencyStatement s = queue.front();
    queue.pop_front();

    if (visit(s, {Axiom::Symmetry, {}, {}, apply_symmetry(s)})) return seen;
    for (const auto& moved : s.second.subsets()) {
      if (moved.empty()) continue;
      if (visit(s, {Axiom::Augmentation, moved, {}, apply_augmentation(s, moved)})) return seen;
    }
    const auto first_subsets = s.first.subsets();
    const auto second_subsets = s.second.subsets();
    for (const auto& keep_first : first_subsets) {
      for (const auto& keep_second : second_subsets) {
        if (keep_first == s.first && keep_second == s.second) continue;
        if (visit(s, {Axiom::Projection, keep_first, keep_second,
                      apply_projection(s, keep_first, keep_second)}))
          return seen;
      }
    }
  }
  return seen;
}

void require_query(const AttributeSet& z, const AttributeSet& source, const AttributeSet& target) {
  if (!source.is_disjoint_from(target) || !source.is_disjoint_from(z) ||
      !target.is_disjoint_from(z))
    throw ValidationError("cover query " + source.str() + " ->> " + target.str() + " | " +
                          z.str() + " must have pairwise disjoint components");
}

std::string block_suffix(std::size_t j) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('a' + j % 26));
    j /= 26;
  } while (j-- > 0);
  return out;
}

// Strips comments and blank lines, keeping 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line_no, std::string(line));
  }
  return out;
}

DependencyStatement parse_line(const std::string& line, std::size_t line_no,
                               const std::string& source) {
  try {
    return parse_statement(line);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), source, line_no, e.column(), e.token());
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), source, line_no, 1, line);
  }
}

std::optional<AttributeSet> parse_z_header(const std::string& line, std::size_t line_no,
                                           const std::string& source) {
  if (line.rfind("Z:", 0) != 0) return std::nullopt;
  const auto body = trim(std::string_view(line).substr(2));
  if (body == "_") return AttributeSet{};
  std::vector<Attribute> names;
  for (auto& field : split_fields(body)) {
    if (!is_valid_attribute_name(field))
      throw ParseError("invalid attribute name in Z declaration", source, line_no, 1, field);
    names.push_back(std::move(field));
  }
  try {
    return AttributeSet::from_distinct(names);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), source, line_no, 1, line);
  }
}

} // namespace

// ---------------------------------------------------------------------------

ZEmvdSet::ZEmvdSet(AttributeSet z, std::vector<DependencyStatement> statements)
    : z_(std::move(z)), statements_(std::move(statements)) {
  for (auto& s : statements_) {
    if (s.second != z_)
      throw ValidationError("statement " + s.str() + " does not have third component {" +
                            z_.str() + "}");
    if (!s.lhs.is_disjoint_from(z_) || !s.first.is_disjoint_from(z_) ||
        !s.lhs.is_disjoint_from(s.first))
      throw ValidationError("statement " + s.str() + " is not a Z-EMVD");
    s.kind = DependencyKind::EMVD;
  }
}

ZEmvdSet ZEmvdSet::without(std::size_t index) const {
  auto rest = statements_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return ZEmvdSet(z_, std::move(rest));
}

AttributeSet ZEmvdSet::attributes() const {
  AttributeSet out = z_;
  for (const auto& s : statements_) out = out.unite(s.attributes());
  return out;
}

ZEmvdSet parse_zemvd_set(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 'Z:' line", source, 1, 1, "");
  const auto z = parse_z_header(lines.front().second, lines.front().first, source);
  if (!z) throw ParseError("expected 'Z:' line", source, lines.front().first, 1, lines.front().second);
  std::vector<DependencyStatement> statements;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, line] = lines[i];
    auto s = parse_line(line, line_no, source);
    if (s.second != *z)
      throw ParseError("third component must equal Z = " + z->str(), source, line_no,
                       line.find('|') + 2, s.second.str());
    if (!s.lhs.is_disjoint_from(*z) || !s.first.is_disjoint_from(*z))
      throw ParseError("components must be disjoint from Z", source, line_no, 1, line);
    statements.push_back(std::move(s));
  }
  return ZEmvdSet(*z, std::move(statements));
}

std::vector<DependencyStatement> parse_statement_list(std::string_view text,
                                                      const std::string& source) {
  const auto lines = content_lines(text);
  std::optional<AttributeSet> z;
  std::vector<DependencyStatement> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [line_no, line] = lines[i];
    if (i == 0 && (z = parse_z_header(line, line_no, source))) continue;
    auto s = parse_line(line, line_no, source);
    if (z && s.second != *z)
      throw ParseError("third component must equal Z = " + z->str(), source, line_no,
                       line.find('|') + 2, s.second.str());
    out.push_back(std::move(s));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path, 0, 0, path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---------------------------------------------------------------------------

std::vector<AttributeSet> CoverResult::nodes() const {
  std::vector<AttributeSet> out;
  if (path.empty()) return out;
  out.push_back(path.front().from);
  for (const auto& arc : path) out.push_back(arc.to);
  return out;
}

CoverResult cover_contains(const ZEmvdSet& sigma, const AttributeSet& source,
                           const AttributeSet& target) {
  require_query(sigma.z(), source, target);
  CoverResult result;
  if (target.empty()) {
    result.contained = true;
    return result;
  }
  const AttributeSet goal = source.unite(target);

  // Reaching [W] means every subset of W is reachable too, so a Σ arc
  // X′ → X′Y′ fires from W whenever X′ ⊆ W.
  std::map<AttributeSet, std::optional<std::pair<AttributeSet, std::size_t>>> parent;
  std::deque<AttributeSet> queue{source};
  parent.emplace(source, std::nullopt);
  while (!queue.empty()) {
    const AttributeSet current = queue.front();
    queue.pop_front();
    if (goal.is_subset_of(current)) {
      std::vector<std::pair<AttributeSet, std::size_t>> steps; // (state before, σ index)
      AttributeSet walk = current;
      while (const auto& p = parent.at(walk)) {
        steps.emplace_back(p->first, p->second);
        walk = p->first;
      }
      std::reverse(steps.begin(), steps.end());
      for (const auto& [before, index] : steps) {
        const auto& s = sigma.statements()[index];
        if (before != s.lhs) result.path.push_back({before, s.lhs, ArcKind::Subset, 0});
        result.path.push_back({s.lhs, s.lhs.unite(s.first), ArcKind::Sigma, index});
      }
      if (current != goal) result.path.push_back({current, goal, ArcKind::Subset, 0});
      result.contained = true;
      return result;
    }
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      const auto& s = sigma.statements()[k];
      if (!s.lhs.is_subset_of(current)) continue;
      auto next = s.lhs.unite(s.first);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(current, k));
      queue.push_back(std::move(next));
    }
  }
  return result;
}

CoverResult cover_contains(const ZEmvdSet& sigma, const DependencyStatement& query) {
  if (query.second != sigma.z())
    throw ValidationError("query " + query.str() + " must have third component " +
                          sigma.z().str());
  return cover_contains(sigma, query.lhs, query.first);
}

bool is_valid_cover_path(const ZEmvdSet& sigma, const std::vector<CoverArc>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& arc = path[i];
    if (!arc.from.is_disjoint_from(sigma.z()) || !arc.to.is_disjoint_from(sigma.z()))
      return false;
    if (i > 0 && path[i - 1].to != arc.from) return false;
    if (arc.kind == ArcKind::Subset) {
      if (!arc.to.is_subset_of(arc.from)) return false;
    } else {
      if (arc.statement >= sigma.size()) return false;
      const auto& s = sigma.statements()[arc.statement];
      if (arc.from != s.lhs || arc.to != s.lhs.unite(s.first)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
  case Axiom::Symmetry: return "symmetry";
  case Axiom::Augmentation: return "augmentation";
  case Axiom::Projection: return "projection";
  }
  return "?";
}

DependencyStatement apply_symmetry(const DependencyStatement& s) {
  return DependencyStatement(s.lhs, s.second, s.first, s.kind);
}

DependencyStatement apply_augmentation(const DependencyStatement& s, const AttributeSet& moved) {
  if (!moved.is_subset_of(s.second))
    throw ValidationError("augmentation set {" + moved.str() + "} is not inside " +
                          s.second.str());
  return DependencyStatement(s.lhs.unite(moved), s.first, s.second.minus(moved), s.kind);
}

DependencyStatement apply_projection(const DependencyStatement& s, const AttributeSet& keep_first,
                                     const AttributeSet& keep_second) {
  if (!keep_first.is_subset_of(s.first) || !keep_second.is_subset_of(s.second))
    throw ValidationError("projection onto " + keep_first.str() + " | " + keep_second.str() +
                          " is not inside " + s.first.str() + " | " + s.second.str());
  return DependencyStatement(s.lhs, keep_first, keep_second, s.kind);
}

DependencyStatement replay(const Derivation& derivation) {
  DependencyStatement current = derivation.source;
  for (const auto& step : derivation.steps) {
    DependencyStatement next;
    switch (step.axiom) {
    case Axiom::Symmetry: next = apply_symmetry(current); break;
    case Axiom::Augmentation: next = apply_augmentation(current, step.first_parameter); break;
    case Axiom::Projection:
      next = apply_projection(current, step.first_parameter, step.second_parameter);
      break;
    }
    if (as_emvd(next) != as_emvd(step.result))
      throw ValidationError("derivation step " + std::string(to_string(step.axiom)) + " gives " +
                            next.str() + ", recorded " + step.result.str());
    current = std::move(next);
  }
  return current;
}

std::set<DependencyStatement> axiom_closure(const DependencyStatement& s, std::size_t max_size) {
  std::set<DependencyStatement> out;
  for (auto& [statement, parent] : saturate(s, max_size, std::nullopt)) out.insert(statement);
  return out;
}

std::optional<Derivation> derive(const DependencyStatement& source,
                                 const DependencyStatement& target, std::size_t max_size) {
  const auto goal = as_emvd(target);
  const auto seen = saturate(source, max_size, goal);
  const auto it = seen.find(goal);
  if (it == seen.end()) return std::nullopt;
  Derivation d{as_emvd(source), {}};
  for (auto walk = it; walk->second; walk = seen.find(walk->second->from))
    d.steps.push_back(walk->second->step);
  std::reverse(d.steps.begin(), d.steps.end());
  return d;
}

ImplicationResult lemma3_implies(const ZEmvdSet& sigma, const DependencyStatement& target,
                                 const ImplicationOptions& options) {
  const auto tau = as_emvd(target);
  ImplicationResult result;
  if (tau.trivial()) {
    result.implied = true;
    return result;
  }

  const AttributeSet& z = sigma.z();
  const AttributeSet outside_z = sigma.attributes().unite(tau.attributes()).minus(z);

  // Atoms: attributes outside Z grouped by which mentioned sets contain them.
  std::vector<const AttributeSet*> mentioned{&tau.lhs, &tau.first, &tau.second};
  for (const auto& s : sigma.statements()) {
    mentioned.push_back(&s.lhs);
    mentioned.push_back(&s.first);
  }
  std::map<std::vector<bool>, std::vector<Attribute>> by_signature;
  for (const auto& name : outside_z) {
    std::vector<bool> signature;
    for (const auto* set : mentioned) signature.push_back(set->contains(name));
    by_signature[signature].push_back(name);
  }
  std::vector<AttributeSet> lhs_atoms;
  for (auto& [signature, names] : by_signature) {
    AttributeSet atom(std::move(names));
    if (atom.is_subset_of(tau.lhs)) lhs_atoms.push_back(std::move(atom));
  }

  // The candidate's lhs S is a union of atoms inside the target's lhs (the
  // axioms never shrink a lhs). Its first component only needs to carry
  // the target's remaining attributes outside Z: a smaller first component
  // keeps cover membership (subset arcs) and the closure keeps the target.
  if (lhs_atoms.size() >= 63 || (std::size_t{1} << lhs_atoms.size()) > options.max_candidates)
    throw ResourceError("implication candidate enumeration needs 2^" +
                        std::to_string(lhs_atoms.size()) + " candidates, over the bound of " +
                        std::to_string(options.max_candidates));
  const AttributeSet needed = tau.attributes().minus(z);
  const std::size_t count = std::size_t{1} << lhs_atoms.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    AttributeSet lhs;
    for (std::size_t i = 0; i < lhs_atoms.size(); ++i)
      if (mask & (std::size_t{1} << i)) lhs = lhs.unite(lhs_atoms[i]);
    ++result.candidates_examined;
    const AttributeSet first = needed.minus(lhs);
    if (first.empty()) continue;
    auto cover = cover_contains(sigma, lhs, first);
    if (!cover.contained) continue;
    const DependencyStatement candidate(lhs, first, z);
    auto derivation = derive(candidate, tau, options.max_closure);
    if (!derivation) continue;
    if (!result.derivation || derivation->steps.size() < result.derivation->steps.size()) {
      result.implied = true;
      result.witness = candidate;
      result.cover = std::move(cover);
      result.derivation = std::move(derivation);
      if (result.derivation->steps.empty()) break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

const AttributeSet& SigmaN::block(std::ptrdiff_t i) const {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return blocks[static_cast<std::size_t>(((i % m) + m) % m)];
}

DependencyStatement SigmaN::statement(std::ptrdiff_t i, std::ptrdiff_t j) const {
  return DependencyStatement(block(i), block(j), z);
}

SigmaN build_sigma_n(std::size_t n, std::size_t block_size, std::size_t z_size) {
  if (n < 2) throw ValidationError("Σ(n) needs n ≥ 2");
  if (block_size < 1 || z_size < 1) throw ValidationError("block and Z sizes must be ≥ 1");
  if (n > kMaxSigmaAttributes || block_size > kMaxSigmaAttributes / n ||
      z_size > kMaxSigmaAttributes - n * block_size)
    throw ResourceError("Σ(n) would exceed " + std::to_string(kMaxSigmaAttributes) +
                        " attributes");
  SigmaN out;
  out.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Attribute> names;
    for (std::size_t j = 0; j < block_size; ++j)
      names.push_back("X" + std::to_string(i) + block_suffix(j));
    out.blocks.emplace_back(std::move(names));
  }
  std::vector<Attribute> z_names;
  for (std::size_t j = 0; j < z_size; ++j) z_names.push_back("Z" + std::to_string(j));
  out.z = AttributeSet(std::move(z_names));

  std::vector<DependencyStatement> statements;
  for (std::size_t i = 0; i < n; ++i)
    statements.push_back(out.statement(static_cast<std::ptrdiff_t>(i),
                                       static_cast<std::ptrdiff_t>(i + 1)));
  out.sigma = ZEmvdSet(out.z, std::move(statements));
  return out;
}

} // namespace condep
