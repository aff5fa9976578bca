#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "condep/relation.hpp"

namespace condep {

// Line-oriented relation files:
//
//   A1,A2,#weight
//   0,0,3
//   0,1,1/2
//
// The header names the attributes, optionally followed by a `#weight`
// column. Without it every row weighs 1. Lines starting with `#` are
// comments, except a header consisting of `#weight` alone, which declares
// the empty schema. Blank lines are skipped.

/// Name used for the weight column in headers.
inline constexpr std::string_view kWeightColumn = "#weight";

/// Throws ParseError naming `source`, the line, and the offending token on
/// malformed input, duplicate tuples, or an explicit zero weight.
WeightedRelation parse_relation(std::string_view text, const std::string& source = "<input>");

WeightedRelation read_relation_file(const std::filesystem::path& path);

/// Canonical form: attributes in canonical order, `#weight` column always
/// present, rows in canonical order. parse_relation(format_relation(r)) == r.
std::string format_relation(const WeightedRelation& relation);

/// Splits on commas and trims ASCII whitespace around each field.
std::vector<std::string> split_fields(std::string_view line);

std::string_view trim(std::string_view text);

} // namespace condep
