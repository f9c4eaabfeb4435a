// compgraph: decide, synthesize, check, search and refute orientations of
// complete multipartite graphs whose competition graphs are complete.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compgraph/compgraph.hpp"
#include "verify.hpp"

namespace {

using namespace compgraph;
using nlohmann::json;

constexpr int kExitWitness = 0;
constexpr int kExitNo = 1;          // refuted / nonexistent / problems found
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitIo = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
}

std::string emit_in_format(const MultipartiteTournament& t, const std::string& format) {
  if (format == "dmt") return emit_dmt(t);
  if (format == "json") return to_json(t).dump(2) + "\n";
  if (format == "dot") return emit_dot(t);
  throw CLI::ValidationError("--format", "unknown format '" + format + "'");
}

std::string sizes_string(const std::vector<int>& sizes) {
  std::string s = "K_{";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "}";
}

json outcome_to_json(const SearchOutcome& out, const std::vector<int>& sizes) {
  json prunes = json::object();
  for (PruneRule r : kAllPruneRules) prunes[prune_rule_name(r)] = out.prunes(r);
  json j{{"sizes", sizes},
         {"result", search_result_name(out.result)},
         {"nodes_explored", out.nodes_explored},
         {"prunes_by_rule", std::move(prunes)},
         {"wall_seconds", out.wall_seconds},
         {"symmetry_reduced", out.symmetry_reduced},
         {"witness", nullptr}};
  if (out.witness) j["witness"] = to_json(*out.witness);
  return j;
}

void print_outcome_text(const SearchOutcome& out) {
  std::cout << "result: " << search_result_name(out.result) << "\n";
  std::cout << "nodes explored: " << out.nodes_explored << "\n";
  std::cout << "prunes:";
  for (PruneRule r : kAllPruneRules) std::cout << " " << prune_rule_name(r) << "=" << out.prunes(r);
  std::cout << "\n";
  std::cout << "wall time: " << out.wall_seconds << " s\n";
  if (out.symmetry_reduced) std::cout << "note: symmetry-reduced search space\n";
  if (out.witness) std::cout << "witness:\n" << emit_dmt(*out.witness);
}

int exit_for_outcome(const SearchOutcome& out) {
  switch (out.result) {
    case SearchResult::Witness: return kExitWitness;
    case SearchResult::Exhausted: return kExitNo;
    case SearchResult::Inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

int run_oracle(const std::vector<int>& sizes, bool as_json) {
  const auto verdict = exists_complete_orientation(sizes);
  if (as_json) {
    std::cout << json{{"sizes", sizes},
                      {"exists", verdict.exists},
                      {"clause", clause_name(verdict.clause)}}
                     .dump()
              << "\n";
  } else {
    std::cout << (verdict.exists ? "yes" : "no") << " clause=" << clause_name(verdict.clause)
              << "\n";
  }
  return verdict.exists ? kExitWitness : kExitNo;
}

int run_witness(const std::vector<int>& sizes, const std::string& format,
                const std::string& output) {
  const auto witness = synthesize_witness(sizes);
  if (!witness) {
    const auto verdict = exists_complete_orientation(sizes);
    std::cerr << "compgraph: no orientation of " << sizes_string(sizes)
              << " has a complete competition graph (clause=" << clause_name(verdict.clause)
              << ")\n";
    return kExitNo;
  }
  write_output(output, emit_in_format(*witness, format));
  return kExitWitness;
}

int run_check(const std::string& path, bool as_json) {
  const auto t = parse_auto(read_input(path));
  const auto violations = validate(t);
  const auto report = condition_report(t);
  const auto noncompeting = first_noncompeting_pair(t);

  bool conditions_ok = true;
  for (const auto& c : report) conditions_ok = conditions_ok && (!c.applicable || c.pass);
  const bool ok = violations.empty() && conditions_ok && !noncompeting;

  if (as_json) {
    json jv = json::array();
    for (const auto& v : violations) jv.push_back(v.message());
    json jc = json::array();
    for (const auto& c : report) {
      jc.push_back(json{{"id", condition_name(c.id)},
                        {"applicable", c.applicable},
                        {"pass", c.pass},
                        {"detail", c.detail}});
    }
    json j{{"sizes", t.parts.sizes()},
           {"valid", violations.empty()},
           {"violations", std::move(jv)},
           {"competition_complete", !noncompeting},
           {"first_noncompeting_pair", nullptr},
           {"conditions", std::move(jc)}};
    if (noncompeting) j["first_noncompeting_pair"] = {noncompeting->first, noncompeting->second};
    std::cout << j.dump(2) << "\n";
    return ok ? kExitWitness : kExitNo;
  }

  std::cout << "sizes: " << sizes_string(t.parts.sizes()) << "  (n=" << t.d.vertex_count()
            << ", k=" << t.parts.part_count() << ")\n";
  if (violations.empty()) {
    std::cout << "valid multipartite tournament: yes\n";
  } else {
    std::cout << "valid multipartite tournament: no\n";
    for (const auto& v : violations) std::cout << "  violation: " << v.message() << "\n";
  }
  std::cout << "competition graph: " << (noncompeting ? "incomplete" : "complete");
  if (noncompeting)
    std::cout << "  (pair {" << noncompeting->first << "," << noncompeting->second
              << "} has no common out-neighbor)";
  std::cout << "\nconditions:\n";
  for (const auto& c : report) {
    std::printf("  %-16s %s", condition_name(c.id),
                !c.applicable ? "n/a" : (c.pass ? "pass" : "FAIL"));
    if (!c.detail.empty() && c.applicable) std::printf("  (%s)", c.detail.c_str());
    std::printf("\n");
  }
  if (t.parts.sizes() == std::vector<int>{4, 4, 4}) {
    if (auto pair = equal_out_neighborhood_pair(t))
      std::cout << "note: vertices " << pair->x << " and " << pair->y
                << " share their out-neighborhood inside part " << pair->target_part << "\n";
  }
  return ok ? kExitWitness : kExitNo;
}

int run_search(const std::vector<int>& sizes, const SearchConfig& cfg, bool as_json) {
  const auto out = exhaustive_search(sizes, cfg);
  if (as_json)
    std::cout << outcome_to_json(out, sizes).dump(2) << "\n";
  else
    print_outcome_text(out);
  return exit_for_outcome(out);
}

int run_refute(const std::vector<int>& sizes, const SearchConfig& cfg, bool as_json) {
  const auto counting = refute_by_counting(sizes);
  if (counting.refuted) {
    if (as_json) {
      json reasons = json::array();
      for (const auto& [cond, detail] : counting.reasons)
        reasons.push_back(json{{"condition", condition_name(cond)}, {"detail", detail}});
      std::cout << json{{"sizes", sizes},
                        {"method", "counting"},
                        {"refuted", true},
                        {"reasons", std::move(reasons)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "refuted by counting: no orientation of " << sizes_string(sizes)
                << " has a complete competition graph\n";
      for (const auto& [cond, detail] : counting.reasons)
        std::cout << "  " << condition_name(cond) << ": " << detail << "\n";
    }
    return kExitNo;
  }

  long long total = 0;
  for (int s : sizes) total += s;
  if (total > cfg.max_total) {
    if (as_json)
      std::cout << json{{"sizes", sizes}, {"method", "none"}, {"refuted", false},
                        {"reason", "counting inconclusive and vertex total exceeds the search cap"}}
                       .dump(2)
                << "\n";
    else
      std::cout << "inconclusive: counting does not refute " << sizes_string(sizes)
                << " and its " << total << " vertices exceed the search cap " << cfg.max_total
                << "\n";
    return kExitInconclusive;
  }

  const auto out = exhaustive_search(sizes, cfg);
  if (as_json) {
    json j{{"sizes", sizes}, {"method", "search"}, {"refuted", out.result == SearchResult::Exhausted},
           {"search", outcome_to_json(out, sizes)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "counting inconclusive; exhaustive search:\n";
    print_outcome_text(out);
  }
  return exit_for_outcome(out);
}

int run_dump_witness(const std::string& name, const std::string& format,
                     const std::string& output) {
  const auto id = witness_from_name(name);
  if (!id) throw CLI::ValidationError("id", "unknown witness '" + name + "'");
  write_output(output, emit_in_format(load_witness(*id), format));
  return kExitWitness;
}

int run_verify(const std::string& level, int workers, std::uint64_t seed, bool as_json) {
  const bool full = level == "full";
  const auto checks = verify::verify_paper(full, workers, seed);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (as_json) {
    json jc = json::array();
    for (const auto& c : checks)
      jc.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << json{{"level", level}, {"seed", seed}, {"all_pass", all}, {"checks", std::move(jc)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "verification level: " << level << " (seed " << seed << ")\n";
    for (const auto& c : checks)
      std::printf("%s  %-32s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return all ? kExitWitness : kExitNo;
}

SearchConfig parse_prune_spec(SearchConfig cfg, const std::string& spec) {
  if (spec == "all") return cfg;
  if (spec == "none") {
    cfg.prune.fill(false);
    return cfg;
  }
  cfg.prune.fill(false);
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto rule = prune_rule_from_name(item);
    if (!rule) throw CLI::ValidationError("--prune", "unknown rule '" + item + "'");
    cfg.enable(*rule);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"competition graphs of multipartite tournaments: oracle, witnesses, search"};
  app.require_subcommand(1);

  std::vector<int> sizes;
  bool as_json = false;
  std::string format = "dmt";
  std::string output;
  std::string path;
  std::string prune_spec = "all";
  std::string witness_id;
  std::string level = "quick";
  SearchConfig cfg;
  std::uint64_t seed = 20260808;
  std::optional<std::uint64_t> max_nodes;

  auto* oracle_cmd = app.add_subcommand("oracle", "decide a size tuple");
  oracle_cmd->add_option("sizes", sizes, "part sizes, nonincreasing")->required();
  oracle_cmd->add_flag("--json", as_json, "JSON output");

  auto* witness_cmd = app.add_subcommand("witness", "synthesize a certified orientation");
  witness_cmd->add_option("sizes", sizes, "part sizes, nonincreasing")->required();
  witness_cmd->add_option("--format", format, "dmt|json|dot")->capture_default_str();
  witness_cmd->add_flag_callback("--json", [&] { format = "json"; }, "JSON output");
  witness_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "validate a DMT/JSON file and run all conditions");
  check_cmd->add_option("file", path, "input file, '-' for stdin")->required();
  check_cmd->add_flag("--json", as_json, "JSON output");

  auto* search_cmd = app.add_subcommand("search", "exhaustive orientation search with pruning");
  search_cmd->add_option("sizes", sizes, "part sizes, nonincreasing")->required();
  search_cmd->add_option("--prune", prune_spec, "all|none|RULE[,RULE...]")->capture_default_str();
  search_cmd->add_option("--max-nodes", max_nodes, "node budget; exceeding it is inconclusive");
  search_cmd->add_option("--workers", cfg.workers, "parallel workers")->capture_default_str();
  search_cmd->add_flag("--symmetry", cfg.symmetry_fix, "fix the first vertex block up to symmetry");
  search_cmd->add_option("--max-n", cfg.max_total, "vertex-total cap for the search")
      ->capture_default_str();
  search_cmd->add_flag("--json", as_json, "JSON output");

  auto* refute_cmd = app.add_subcommand("refute", "counting refutation, then search if needed");
  refute_cmd->add_option("sizes", sizes, "part sizes, nonincreasing")->required();
  refute_cmd->add_option("--max-nodes", max_nodes, "node budget for the search fallback");
  refute_cmd->add_option("--workers", cfg.workers, "parallel workers")->capture_default_str();
  refute_cmd->add_option("--max-n", cfg.max_total, "vertex-total cap for the search fallback")
      ->capture_default_str();
  refute_cmd->add_flag("--json", as_json, "JSON output");

  auto* dump_cmd = app.add_subcommand("dump-witness", "emit one of the embedded constructions");
  dump_cmd->add_option("id", witness_id, "QR7 or A1..A9")->required();
  dump_cmd->add_option("--format", format, "dmt|json|dot")->capture_default_str();
  dump_cmd->add_flag_callback("--json", [&] { format = "json"; }, "JSON output");
  dump_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full result-verification suite");
  verify_cmd->add_option("--level", level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify_cmd->add_option("--workers", cfg.workers, "parallel workers (default: hardware)");
  verify_cmd->add_option("--seed", seed, "seed for the randomized spot-checks")
      ->capture_default_str();
  verify_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    cfg.max_nodes = max_nodes;
    if (oracle_cmd->parsed()) return run_oracle(sizes, as_json);
    if (witness_cmd->parsed()) return run_witness(sizes, format, output);
    if (check_cmd->parsed()) return run_check(path, as_json);
    if (search_cmd->parsed()) return run_search(sizes, parse_prune_spec(cfg, prune_spec), as_json);
    if (refute_cmd->parsed()) return run_refute(sizes, cfg, as_json);
    if (dump_cmd->parsed()) return run_dump_witness(witness_id, format, output);
    if (verify_cmd->parsed()) {
      if (verify_cmd->count("--workers") == 0)
        cfg.workers = std::max(1u, std::thread::hardware_concurrency());
      return run_verify(level, cfg.workers, seed, as_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "compgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "compgraph: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "compgraph: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "compgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "compgraph: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "compgraph: internal error: " << e.what() << "\n";
    return 5;
  }
  return kExitUsage;
}
