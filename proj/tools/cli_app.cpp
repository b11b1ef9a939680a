#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "procgame/errors.hpp"
#include "procgame/generator.hpp"
#include "procgame/parser.hpp"
#include "procgame/process_game.hpp"
#include "procgame/render.hpp"
#include "procgame/solver.hpp"

namespace procgame::cli {
namespace {

using nlohmann::json;

bool want_color(const std::ostream& stream, int fd) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  const std::ostream* standard = fd == 1 ? static_cast<const std::ostream*>(&std::cout)
                                         : static_cast<const std::ostream*>(&std::cerr);
  return &stream == standard && isatty(fd) == 1;
}

std::string tag(const std::ostream& err, const char* kind, const char* color) {
  if (want_color(err, 2))
    return std::string("\x1b[") + color + "m" + kind + ":\x1b[0m ";
  return std::string(kind) + ": ";
}

std::string error_tag(const std::ostream& err) { return tag(err, "error", "31"); }
std::string warning_tag(const std::ostream& err) { return tag(err, "warning", "33"); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Path: return "path";
    case Verdict::NoPureEquilibrium: return "no-pure-equilibrium";
    case Verdict::Ambiguous: return "ambiguous";
  }
  return "unknown";
}

json stats_json(const SolveStats& stats) {
  return json{{"nodes", stats.nodes_expanded},
              {"peak", stats.peak_entries},
              {"ties", stats.tie_breaks}};
}

int do_check(const std::string& path, std::size_t max_nodes,
             std::ostream& out, std::ostream& err) {
  ProcessGame game = parse_game(slurp(path));
  std::vector<Diagnostic> diagnostics = validate(game, max_nodes);
  bool failed = false;
  for (const Diagnostic& d : diagnostics) {
    if (d.severity == Diagnostic::Severity::Error) {
      failed = true;
      err << error_tag(err) << d.message << "\n";
    } else {
      err << warning_tag(err) << d.message << "\n";
    }
  }
  if (failed) return 5;
  out << "ok\n";
  return 0;
}

int do_tree(const std::string& path, const std::string& format,
            std::size_t max_nodes, std::ostream& out) {
  ProcessGame game = parse_game(slurp(path));
  if (format == "dot")
    out << to_dot(game, max_nodes);
  else
    out << canonical_term(game, max_nodes) << "\n";
  return 0;
}

int do_solve(const std::string& path, const std::string& tie_break,
             bool as_json, std::ostream& out, std::ostream& err) {
  ProcessGame game = parse_game(slurp(path));
  TieBreak mode =
      tie_break == "error" ? TieBreak::Error : TieBreak::Lexicographic;
  EquilibriumResult result = solve(game, mode);

  if (as_json) {
    json doc{{"verdict", verdict_name(result.verdict)},
             {"stats", stats_json(result.stats)}};
    if (result.verdict == Verdict::Path) {
      json labels = json::array();
      for (const ActionLabel& label : result.path) labels.push_back(label.str());
      doc["path"] = labels;
      doc["payoffs"] = result.payoffs;
    }
    out << doc.dump() << "\n";
  } else {
    switch (result.verdict) {
      case Verdict::Path: {
        out << "path:";
        for (const ActionLabel& label : result.path) out << " " << label.str();
        out << "\n";
        out << "payoffs:";
        for (double v : result.payoffs) out << " " << v;
        out << "\n";
        out << "nodes: " << result.stats.nodes_expanded << "\n";
        out << "peak: " << result.stats.peak_entries << "\n";
        out << "ties: " << result.stats.tie_breaks << "\n";
        break;
      }
      case Verdict::NoPureEquilibrium:
        out << "no pure equilibrium path\n";
        break;
      case Verdict::Ambiguous:
        out << "ambiguous: several optimal choices tie\n";
        break;
    }
  }
  if (result.verdict == Verdict::Path && result.stats.tie_breaks > 0)
    err << warning_tag(err) << "ties broken by label at "
        << result.stats.tie_breaks << " node(s)\n";

  if (result.verdict == Verdict::NoPureEquilibrium) return 2;
  if (result.verdict == Verdict::Ambiguous) return 4;
  return 0;
}

int do_size(const std::string& path, std::optional<int> degree, bool as_json,
            std::size_t max_nodes, std::ostream& out) {
  ProcessGame game = parse_game(slurp(path));
  SizeReport report = size_report(game, degree, max_nodes);

  if (as_json) {
    json rows = json::array();
    for (const PlayerSizeReport& row : report.players) {
      rows.push_back(json{{"name", row.name},
                          {"actions", row.action_count},
                          {"transitions", row.process_size},
                          {"payoff_size", row.payoff_size}});
    }
    json doc{{"players", report.player_count},
             {"max_actions", report.max_actions},
             {"action_base", report.action_base_size},
             {"description_bound", report.description_bound},
             {"tree_bound", report.tree_bound},
             {"per_player", rows}};
    doc["exact_tree_size"] =
        report.exact_tree_size ? json(*report.exact_tree_size) : json(nullptr);
    if (report.degree_bound) doc["degree_bound"] = *report.degree_bound;
    out << doc.dump() << "\n";
    return 0;
  }

  out << "players: " << report.player_count << "\n";
  out << "max-actions: " << report.max_actions << "\n";
  out << "action-base: " << report.action_base_size << "\n";
  out << "description-bound: " << report.description_bound << "\n";
  out << "tree-bound: " << report.tree_bound << "\n";
  if (report.exact_tree_size)
    out << "exact-tree-size: " << *report.exact_tree_size << "\n";
  if (report.degree_bound)
    out << "degree-bound: " << *report.degree_bound << "\n";
  for (const PlayerSizeReport& row : report.players) {
    out << "player " << row.name << ": actions=" << row.action_count
        << " transitions=" << row.process_size
        << " payoff-size=" << row.payoff_size << "\n";
  }
  return 0;
}

int do_gen(const GeneratorOptions& options, const std::string& output,
           std::ostream& out) {
  std::string text = generate_game_text(options);
  if (output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error("cannot write '" + output + "'");
  file << text;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"process game tool: turn compact game descriptions into "
               "trees, sizes and equilibrium paths"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);

  std::string path;
  std::size_t max_nodes = 1'000'000;
  std::string format = "text";
  std::string tie_break = "lex";
  bool as_json = false;
  int degree = -1;
  GeneratorOptions gen_options;
  std::string gen_output;

  CLI::App* check = app.add_subcommand("check", "parse and validate a game file");
  check->add_option("file", path, "game file")->required();
  check->add_option("--max-nodes", max_nodes, "node budget for tree checks");

  CLI::App* tree = app.add_subcommand("tree", "print the game tree");
  tree->add_option("file", path, "game file")->required();
  tree->add_option("--format", format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));
  tree->add_option("--max-nodes", max_nodes, "node budget");

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "find an equilibrium path");
  solve_cmd->add_option("file", path, "game file")->required();
  solve_cmd->add_option("--tie-break", tie_break,
                        "lex breaks ties by label, error refuses")
      ->check(CLI::IsMember({"lex", "error"}));
  solve_cmd->add_flag("--json", as_json, "machine readable output");

  CLI::App* size = app.add_subcommand("size", "print size metrics and bounds");
  size->add_option("file", path, "game file")->required();
  size->add_option("--delta", degree,
                   "neighbourhood size for the local-interaction bound");
  size->add_flag("--json", as_json, "machine readable output");
  size->add_option("--max-nodes", max_nodes, "budget for the exact tree size");

  CLI::App* gen = app.add_subcommand("gen", "emit a generated game file");
  gen->add_option("--players", gen_options.players, "number of players");
  gen->add_option("--actions", gen_options.actions, "moves per player");
  gen->add_option("--degree", gen_options.degree, "neighbours per player");
  gen->add_option("--seed", gen_options.seed, "generator seed");
  gen->add_option("-o,--output", gen_output, "write to a file instead");

  std::vector<const char*> argv;
  argv.push_back("procgame");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_tag(err) << e.what() << "\n";
    return 1;
  }

  try {
    if (check->parsed()) return do_check(path, max_nodes, out, err);
    if (tree->parsed()) return do_tree(path, format, max_nodes, out);
    if (solve_cmd->parsed())
      return do_solve(path, tie_break, as_json, out, err);
    if (size->parsed()) {
      std::optional<int> delta;
      if (size->count("--delta") > 0) delta = degree;
      return do_size(path, delta, as_json, max_nodes, out);
    }
    if (gen->parsed()) return do_gen(gen_options, gen_output, out);
    err << error_tag(err) << "no command given\n";
    return 1;
  } catch (const procgame::ParseError& e) {
    err << error_tag(err) << path << ":" << e.what() << "\n";
    return 3;
  } catch (const SemanticError& e) {
    for (const std::string& problem : e.problems())
      err << error_tag(err) << problem << "\n";
    return 5;
  } catch (const BudgetExceededError& e) {
    err << error_tag(err) << e.what() << "\n";
    return 6;
  } catch (const NoMatchingRuleError& e) {
    err << error_tag(err) << e.what() << "\n";
    return 5;
  } catch (const AlphabetOverlapError& e) {
    err << error_tag(err) << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    err << error_tag(err) << e.what() << "\n";
    return 1;
  }
}

}  // namespace procgame::cli
