#include <algorithm>

#include "condep/dependency.hpp"
#include "condep/error.hpp"
#include "condep/relation_io.hpp"

namespace condep {

namespace {

constexpr std::string_view kArrow = "->>";
const std::string kStatementSource = "<statement>";

// Parses one side of a statement found at [offset, offset + text.size()).
AttributeSet parse_side(std::size_t offset, std::string_view text,
                        const char* role) {
  const auto body = trim(text);
  if (body.empty())
    throw ParseError(std::string("empty ") + role + " (write '_' for the empty set)",
                     kStatementSource, 1, offset + 1, "");
  if (body == "_") return {};

  std::vector<Attribute> names;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    const auto name = trim(piece);
    const std::size_t lead = piece.find_first_not_of(" \t");
    const std::size_t column = offset + start + (lead == std::string_view::npos ? 0 : lead) + 1;
    if (!is_valid_attribute_name(name))
      throw ParseError(std::string("invalid attribute name in ") + role, kStatementSource, 1,
                       column, std::string(name));
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw ParseError(std::string("repeated attribute in ") + role, kStatementSource, 1, column,
                       std::string(name));
    names.emplace_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return AttributeSet(std::move(names));
}

} // namespace

DependencyStatement parse_statement(std::string_view text, DependencyKind kind) {
  const auto arrow = text.find(kArrow);
  if (arrow == std::string_view::npos)
    throw ParseError("expected '->>'", kStatementSource, 1, 1, std::string(text));
  if (text.find(kArrow, arrow + kArrow.size()) != std::string_view::npos)
    throw ParseError("more than one '->>'", kStatementSource, 1,
                     text.find(kArrow, arrow + kArrow.size()) + 1, std::string(kArrow));
  const std::size_t rhs_start = arrow + kArrow.size();
  const auto bar = text.find('|', rhs_start);
  if (bar == std::string_view::npos)
    throw ParseError("expected '|'", kStatementSource, 1, text.size() + 1, "");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("more than one '|'", kStatementSource, 1, text.find('|', bar + 1) + 1, "|");

  auto x = parse_side(0, text.substr(0, arrow), "left-hand side");
  auto y = parse_side(rhs_start, text.substr(rhs_start, bar - rhs_start), "first component");
  auto z = parse_side(bar + 1, text.substr(bar + 1), "second component");
  return DependencyStatement(std::move(x), std::move(y), std::move(z), kind);
}

} // namespace condep
