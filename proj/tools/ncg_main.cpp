// ncg: command-line front end for non-commuting graph analysis.
//
// Exit codes: 0 success / all claims pass, 1 verification failure,
// 2 usage, parse, build or import error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncg/cayley_io.hpp"
#include "ncg/families.hpp"
#include "ncg/graph_io.hpp"
#include "ncg/ncg.hpp"
#include "ncg/report.hpp"
#include "ncg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string format;  // empty = command default
  std::string out;
  std::size_t max_order = ncg::kDefaultMaxOrder;
  bool complement = false;
  std::uint64_t node_budget = ncg::kDefaultNodeBudget;
  std::uint64_t seed = 0;
  bool timing = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) ncg::fail(ncg::ErrorCode::Io, "cannot write " + cfg.out);
  f << text;
}

std::string format_or(const CliConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

constexpr std::string_view kImportedPrefix = "imported:";

/// A spec string, or "imported:<path>" for a Cayley-table file.
ncg::BuiltGroup resolve(const std::string& text, const CliConfig& cfg) {
  if (text.rfind(kImportedPrefix, 0) == 0) return ncg::import_cayley_table(text.substr(kImportedPrefix.size()));
  return ncg::build(ncg::parse_spec(text), cfg.max_order);
}

std::string graph_text(const ncg::FiniteGroup& g, const CliConfig& cfg, const std::string& format) {
  const ncg::NcgContext ctx = ncg::build_ncg(g);
  const ncg::SimpleGraph graph = cfg.complement ? ncg::complement(ctx.graph()) : ctx.graph();
  if (format == "csv") return ncg::to_edge_csv(graph);
  std::vector<std::string> labels;
  for (ncg::Element e : ctx.non_central()) labels.push_back(g.labels()[e]);
  return ncg::to_dot(graph, labels);
}

int cmd_analyze(const std::vector<std::string>& specs, const CliConfig& cfg) {
  const std::string format = format_or(cfg, "json");
  std::vector<ncg::BuiltGroup> groups;
  for (const auto& text : specs) groups.push_back(resolve(text, cfg));  // all specs are checked before any output

  ncg::AnalyzeOptions options{cfg.node_budget, cfg.timing};
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : groups)
      arr.push_back(std::visit([&](const auto& group) { return ncg::to_json(ncg::analyze(group, options), cfg.timing); }, g));
    emit(cfg, arr.dump(2) + "\n");
    return kExitOk;
  }
  std::string text;
  for (const auto& g : groups) {
    const auto* finite = std::get_if<ncg::FiniteGroup>(&g);
    if (!finite) throw UsageError("graph formats need a materialized group; use --format json for lazy groups");
    text += graph_text(*finite, cfg, format);
  }
  emit(cfg, text);
  return kExitOk;
}

int cmd_export(const std::string& spec, const CliConfig& cfg) {
  const std::string format = format_or(cfg, "dot");
  ncg::BuiltGroup built = resolve(spec, cfg);
  const auto* g = std::get_if<ncg::FiniteGroup>(&built);
  if (!g)
    ncg::fail(ncg::ErrorCode::CapExceeded, spec + " is above the cap " + std::to_string(cfg.max_order) +
                                               " and cannot be exported");
  if (format == "json") {
    if (cfg.complement) throw UsageError("--complement applies to graph formats only");
    emit(cfg, ncg::cayley_table_json(*g));
  } else {
    emit(cfg, graph_text(*g, cfg, format));
  }
  return kExitOk;
}

int cmd_import(const std::string& path, const CliConfig& cfg) {
  const ncg::FiniteGroup g = ncg::import_cayley_table(path);
  if (format_or(cfg, "json") != "json") {
    emit(cfg, graph_text(g, cfg, cfg.format));
    return kExitOk;
  }
  const ncg::AnalyzeOptions options{cfg.node_budget, cfg.timing};
  emit(cfg, ncg::to_json(ncg::analyze(g, options), cfg.timing).dump(2) + "\n");
  return kExitOk;
}

int cmd_families(const CliConfig& cfg) {
  const std::string format = format_or(cfg, "json");
  if (format != "json") throw UsageError("families supports --format json only");
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : ncg::family_catalog())
    arr.push_back({{"tag", std::string(1, f.tag)}, {"constraints", f.constraints}, {"description", f.description}});
  emit(cfg, arr.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, const std::vector<std::string>& injected, std::optional<int> claim) {
  ncg::VerifyOptions options;
  options.max_order = cfg.max_order;
  options.seed = cfg.seed;
  options.node_budget = cfg.node_budget;
  for (const auto& path : injected)
    options.extra_groups.push_back(ncg::import_cayley_table(path, ncg::FiniteGroup::Validation::Unchecked));

  ncg::VerificationSuite suite(std::move(options));
  std::vector<ncg::ClaimResult> results;
  if (claim) {
    results.push_back(suite.run(*claim));
  } else {
    results = suite.run_all();
  }

  bool failed = false;
  for (const auto& r : results) failed |= r.status == ncg::ClaimStatus::Fail;

  if (format_or(cfg, "text") == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"status", std::string(ncg::to_string(r.status))},
                     {"detail", r.detail},
                     {"table", r.table}});
    emit(cfg, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << "[" << ncg::to_string(r.status) << "] claim " << r.id << ": " << r.title << " (" << r.detail;
      if (r.status != ncg::ClaimStatus::Skipped) os << "; " << r.seconds << " s";
      os << ")\n";
      for (const auto& line : r.table) os << "    " << line << "\n";
    }
    os << (failed ? "verification FAILED\n" : "verification passed\n");
    emit(cfg, os.str());
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

std::string families_help() {
  std::string s = "Group specs: TERM (\"x\" TERM)*, TERM = FAMILY:INTEGER, e.g. Q:16xC:3.\n";
  for (const auto& f : ncg::family_catalog())
    s += std::string("  ") + f.tag + ":  " + f.description + " [" + f.constraints + "]\n";
  s += "Note: D:n is the dihedral group of order 2n.\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commuting graphs of finite groups: AC/CC tests, matroid checks and clique numbers."};
  app.footer(families_help());
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv", "text"}));
  app.add_option("--out", cfg.out, "Write output to PATH instead of stdout");
  app.add_option("--max-order", cfg.max_order, "Largest order to materialize (default 5000)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--complement", cfg.complement, "Export the complement of the non-commuting graph");
  app.add_option("--node-budget", cfg.node_budget, "Clique search node budget (default 1e8)");
  app.add_option("--seed", cfg.seed, "Seed for randomized property claims (default 0)");
  app.add_flag("--timing", cfg.timing, "Include per-phase timings in JSON reports");

  std::vector<std::string> specs;
  auto* analyze = app.add_subcommand("analyze", "Analyze one or more groups");
  analyze->add_option("specs", specs, "Group specs, or imported:PATH")->required();

  std::vector<std::string> injected;
  int claim_id = 0;
  auto* verify = app.add_subcommand("verify", "Run the built-in acceptance claims");
  verify->add_option("--inject-table", injected, "Add an unvalidated Cayley table to the sweep (harness self-test)");
  verify->add_option("--claim", claim_id, "Run a single claim")->check(CLI::Range(1, ncg::kClaimCount));

  std::string export_spec;
  auto* exp = app.add_subcommand("export", "Write the non-commuting graph (dot/csv) or Cayley table (json)");
  exp->add_option("spec", export_spec, "Group spec, or imported:PATH")->required();

  std::string import_path;
  auto* imp = app.add_subcommand("import", "Validate and analyze a Cayley-table JSON file");
  imp->add_option("path", import_path, "Cayley table file")->required();

  auto* families = app.add_subcommand("families", "List the built-in group families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(specs, cfg);
    if (verify->parsed()) return cmd_verify(cfg, injected, claim_id ? std::optional<int>(claim_id) : std::nullopt);
    if (exp->parsed()) return cmd_export(export_spec, cfg);
    if (imp->parsed()) return cmd_import(import_path, cfg);
    if (families->parsed()) return cmd_families(cfg);
  } catch (const ncg::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ncg::TableError& e) {
    std::cerr << "error: " << e.what() << " [law=" << e.law() << ", indices=";
    for (std::size_t k = 0; k < e.indices().size(); ++k) std::cerr << (k ? "," : "") << e.indices()[k];
    std::cerr << "]\n";
    return kExitUsage;
  } catch (const ncg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
