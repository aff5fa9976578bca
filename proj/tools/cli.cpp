#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "condep/dependency.hpp"
#include "condep/error.hpp"
#include "condep/implication.hpp"
#include "condep/relation.hpp"
#include "condep/relation_io.hpp"
#include "condep/report.hpp"
#include "condep/witness.hpp"

namespace condep::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool timing = false;
};

AttributeSet parse_attribute_list(const std::string& text, const std::string& flag) {
  const auto trimmed = trim(text);
  if (trimmed == "_") return {};
  std::vector<Attribute> names;
  std::size_t column = 1;
  for (const auto& field : split_fields(trimmed)) {
    if (!is_valid_attribute_name(field))
      throw ParseError("invalid attribute name", flag, 1, column, field);
    names.push_back(field);
    column += field.size() + 1;
  }
  return AttributeSet(std::move(names));
}

json relation_json(const WeightedRelation& phi) {
  json rows = json::array();
  for (const auto& [row, weight] : phi.rows()) rows.push_back({{"values", row}, {"weight", weight.str()}});
  return {{"schema", phi.schema().names()}, {"rows", std::move(rows)}};
}

void emit_relation(const WeightedRelation& phi, const Options& opt, std::ostream& out) {
  if (opt.json)
    out << relation_json(phi).dump(2) << "\n";
  else
    out << format_relation(phi);
}

json path_json(const CoverResult& cover) {
  json arcs = json::array();
  for (const auto& arc : cover.path) arcs.push_back(to_json(arc));
  return arcs;
}

int cmd_check(const std::string& kind_text, const std::string& file, const std::string& stmt,
              const std::string& method_text, const Options& opt, std::ostream& out) {
  const DependencyKind kind = parse_dependency_kind(kind_text);
  const MvdMethod method = parse_mvd_method(method_text);
  const auto phi = read_relation_file(file);
  const auto s = parse_statement(stmt, kind);
  const bool holds = check(phi, s, method);
  if (opt.json) {
    json j{{"kind", to_string(kind)}, {"statement", s.str()}, {"verdict", holds ? "holds" : "fails"}};
    if (kind == DependencyKind::MVD || kind == DependencyKind::EMVD) j["method"] = to_string(method);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(kind) << " " << s.str() << ": " << (holds ? "holds" : "fails") << "\n";
  }
  return holds ? kHolds : kFails;
}

int cmd_cover(const std::string& file, const std::string& stmt, const Options& opt,
              std::ostream& out) {
  const auto sigma = parse_zemvd_set(read_text_file(file), file);
  const auto query = parse_statement(stmt);
  const auto cover = cover_contains(sigma, query);
  if (opt.json) {
    out << json{{"query", query.str()},
                {"contained", cover.contained},
                {"arcs", cover.path.size()},
                {"path", path_json(cover)}}
                   .dump(2)
        << "\n";
  } else if (cover.contained) {
    out << query.str() << ": in the cover\n"
        << "path (" << cover.path.size() << " arcs): " << format_path(cover) << "\n";
  } else {
    out << query.str() << ": not in the cover\n";
  }
  return cover.contained ? kHolds : kFails;
}

int cmd_derive(const std::string& file, const std::string& stmt, const Options& opt,
               std::ostream& out) {
  const auto sigma = parse_zemvd_set(read_text_file(file), file);
  const auto target = parse_statement(stmt);
  const auto result = lemma3_implies(sigma, target);
  if (opt.json) {
    json j{{"target", target.str()},
           {"implied", result.implied},
           {"candidates_examined", result.candidates_examined}};
    if (result.witness) {
      j["cover_member"] = result.witness->str();
      j["path"] = path_json(result.cover);
    }
    if (result.derivation) j["derivation"] = to_json(*result.derivation);
    out << j.dump(2) << "\n";
  } else {
    out << target.str() << ": " << (result.implied ? "implied" : "not implied") << "\n";
    if (result.witness) {
      out << "cover member: " << result.witness->str() << "\n"
          << "path: " << format_path(result.cover) << "\n";
    }
    if (result.derivation) out << "derivation:\n" << format_derivation(*result.derivation) << "\n";
    if (!result.implied)
      out << "no member of the cover yields the target by symmetry, augmentation and "
             "projection ("
          << result.candidates_examined << " candidates)\n";
  }
  return result.implied ? kHolds : kFails;
}

int cmd_counterexample(std::size_t n, std::size_t block_size, std::size_t z_size,
                       const Options& opt, std::ostream& out) {
  const auto report = nonaxiomatizability_report(n, block_size, z_size);
  if (opt.json)
    out << to_json(report, opt.timing).dump(2) << "\n";
  else
    out << to_text(report, opt.timing);
  return report.all_pass ? kHolds : kFails;
}

int cmd_witness(const std::string& file, const std::string& stmt, const SearchBounds& bounds,
                const Options& opt, std::ostream& out) {
  const auto sigma = parse_statement_list(read_text_file(file), file);
  const auto target = parse_statement(stmt);
  const auto report = find_witness(sigma, target, bounds);
  if (opt.json)
    out << to_json(report, opt.timing).dump(2) << "\n";
  else
    out << to_text(report, opt.timing);
  return report.counterexample ? kFails : kHolds;
}

std::string location(const ParseError& e) {
  std::ostringstream s;
  s << e.source();
  if (e.line() > 0) s << ":" << e.line() << ":" << e.column();
  return s.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted relations, dependency checks and EMVD implication", "condep"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Structured output");
  app.add_flag("--timing", opt.timing, "Include elapsed times");

  std::function<int()> action;

  std::string file, file2, onto, left, right, stmt, kind, method = "definition";

  auto* marg = app.add_subcommand("marg", "Marginalize a relation onto a set of attributes");
  marg->add_option("FILE", file)->required();
  marg->add_option("--onto", onto, "Attributes kept, comma separated or _")->required();
  marg->callback([&] {
    action = [&] {
      emit_relation(marginalize(read_relation_file(file), parse_attribute_list(onto, "--onto")),
                    opt, out);
      return int{kHolds};
    };
  });

  auto* pjoin = app.add_subcommand("pjoin", "Product join of two relations");
  pjoin->add_option("FILE1", file)->required();
  pjoin->add_option("FILE2", file2)->required();
  pjoin->callback([&] {
    action = [&] {
      emit_relation(product_join(read_relation_file(file), read_relation_file(file2)), opt, out);
      return int{kHolds};
    };
  });

  auto* inv = app.add_subcommand("inv", "Pointwise inverse of a relation");
  inv->add_option("FILE", file)->required();
  inv->callback([&] {
    action = [&] {
      emit_relation(inverse(read_relation_file(file)), opt, out);
      return int{kHolds};
    };
  });

  auto* mjoin = app.add_subcommand("mjoin", "Monotone join of two marginals of a relation");
  mjoin->add_option("FILE", file)->required();
  mjoin->add_option("--left", left)->required();
  mjoin->add_option("--right", right)->required();
  mjoin->callback([&] {
    action = [&] {
      emit_relation(monotone_join(read_relation_file(file), parse_attribute_list(left, "--left"),
                                  parse_attribute_list(right, "--right")),
                    opt, out);
      return int{kHolds};
    };
  });

  auto* chk = app.add_subcommand("check", "Check a dependency on a relation");
  chk->add_option("KIND", kind, "mvd, emvd, gmvd, gemvd or ci")
      ->required()
      ->check(CLI::IsMember({"mvd", "emvd", "gmvd", "gemvd", "ci"}));
  chk->add_option("FILE", file)->required();
  chk->add_option("STMT", stmt, "X ->> Y | Z")->required();
  chk->add_option("--method", method, "MVD test: definition, lemma1 or lemma2")
      ->check(CLI::IsMember({"definition", "lemma1", "lemma2"}));
  chk->callback([&] { action = [&] { return cmd_check(kind, file, stmt, method, opt, out); }; });

  auto* cov = app.add_subcommand("cover", "Decide membership in the cover of a Z-EMVD set");
  cov->add_option("SIGMA_FILE", file)->required();
  cov->add_option("STMT", stmt)->required();
  cov->callback([&] { action = [&] { return cmd_cover(file, stmt, opt, out); }; });

  auto* der = app.add_subcommand("derive", "Decide implication of an EMVD by a Z-EMVD set");
  der->add_option("SIGMA_FILE", file)->required();
  der->add_option("STMT", stmt)->required();
  der->callback([&] { action = [&] { return cmd_derive(file, stmt, opt, out); }; });

  std::size_t n = 0, block_size = 1, z_size = 1;
  auto* cex = app.add_subcommand("counterexample", "Report on the cyclic family Sigma(n)");
  cex->add_option("--n", n)->required();
  cex->add_option("--block-size", block_size)->capture_default_str();
  cex->add_option("--z-size", z_size)->capture_default_str();
  cex->callback(
      [&] { action = [&] { return cmd_counterexample(n, block_size, z_size, opt, out); }; });

  SearchBounds bounds;
  auto* wit = app.add_subcommand("witness", "Bounded search for a counterexample relation");
  wit->add_option("SIGMA_FILE", file)->required();
  wit->add_option("STMT", stmt)->required();
  wit->add_option("--domain", bounds.domain_size)->capture_default_str();
  wit->add_option("--max-tuples", bounds.max_tuples)->capture_default_str();
  wit->add_option("--max-candidates", bounds.max_candidates)->capture_default_str();
  wit->add_option("--max-space", bounds.max_tuple_space, "Largest tuple space searched")
      ->capture_default_str();
  wit->add_option("--seed", bounds.seed)->capture_default_str();
  wit->callback([&] { action = [&] { return cmd_witness(file, stmt, bounds, opt, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kHolds} : int{kUsage};
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "condep: " << location(e) << ": " << e.what();
    if (!e.token().empty()) err << " near '" << e.token() << "'";
    err << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "condep: resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    err << "condep: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "condep: " << (file.empty() ? std::string{} : file + ": ") << e.what() << "\n";
    return kUsage;
  }
}

} // namespace condep::cli
