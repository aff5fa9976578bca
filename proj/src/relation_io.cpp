#include "condep/relation_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "condep/error.hpp"

namespace condep {

namespace {

// Column (1-based) of field `index` within the raw line.
std::size_t field_column(std::string_view line, std::size_t index) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < index; ++i) {
    pos = line.find(',', pos);
    if (pos == std::string_view::npos) return line.size() + 1;
    ++pos;
  }
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  return pos + 1;
}

} // namespace

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

WeightedRelation parse_relation(std::string_view text, const std::string& source) {
  bool have_header = false;
  bool weighted = false;
  std::vector<std::size_t> column_to_canonical;
  AttributeSet schema;
  std::vector<std::pair<Row, Rational>> rows;
  std::set<Row> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const bool empty_schema_header = !have_header && line == kWeightColumn;
    if (line.front() == '#' && !empty_schema_header) continue;

    const auto fields = split_fields(line);
    if (!have_header) {
      have_header = true;
      std::vector<Attribute> names;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto& field = fields[i];
        if (field == kWeightColumn) {
          if (i + 1 != fields.size())
            throw ParseError("'#weight' must be the last column", source, line_no,
                             field_column(raw, i), field);
          weighted = true;
          continue;
        }
        if (!is_valid_attribute_name(field))
          throw ParseError("invalid attribute name", source, line_no, field_column(raw, i), field);
        if (std::find(names.begin(), names.end(), field) != names.end())
          throw ParseError("duplicate attribute", source, line_no, field_column(raw, i), field);
        names.push_back(field);
      }
      schema = AttributeSet(names);
      for (const auto& name : names) column_to_canonical.push_back(schema.index_of(name));
      continue;
    }

    const std::size_t expected = schema.size() + (weighted ? 1 : 0);
    if (fields.size() != expected)
      throw ParseError("expected " + std::to_string(expected) + " fields, found " +
                           std::to_string(fields.size()),
                       source, line_no, 1, std::string(line));
    Row row(schema.size());
    for (std::size_t i = 0; i < schema.size(); ++i) {
      if (fields[i].empty())
        throw ParseError("empty value", source, line_no, field_column(raw, i), fields[i]);
      row[column_to_canonical[i]] = fields[i];
    }
    Rational weight(1);
    if (weighted) {
      const auto& token = fields.back();
      try {
        weight = Rational::parse(token);
      } catch (const Error& e) {
        throw ParseError(e.what(), source, line_no, field_column(raw, schema.size()), token);
      }
      if (weight.is_zero())
        throw ParseError("zero weight (list the support only)", source, line_no,
                         field_column(raw, schema.size()), token);
    }
    if (!seen.insert(row).second)
      throw ParseError("duplicate tuple", source, line_no, 1, std::string(line));
    rows.emplace_back(std::move(row), std::move(weight));
  }
  if (!have_header) throw ParseError("missing header line", source, line_no + 1, 1, "");
  return WeightedRelation(schema, rows);
}

WeightedRelation read_relation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path.string(), 0, 0, path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_relation(buffer.str(), path.string());
}

std::string format_relation(const WeightedRelation& relation) {
  std::string out;
  for (const auto& name : relation.schema()) {
    out += name;
    out += ',';
  }
  out += kWeightColumn;
  out += '\n';
  for (const auto& [row, w] : relation.rows()) {
    for (const auto& value : row) {
      out += value;
      out += ',';
    }
    out += w.str();
    out += '\n';
  }
  return out;
}

} // namespace condep
