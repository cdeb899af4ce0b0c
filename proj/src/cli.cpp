#include "tilings/cli.hpp"

#include <algorithm>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "tilings/checks.hpp"
#include "tilings/errors.hpp"
#include "tilings/graphs.hpp"
#include "tilings/survey.hpp"

namespace tilings {
namespace {

struct GlobalFlags {
  bool no_cache = false;
  std::string cache_path;
  double time_limit = 0;  // seconds; 0 = none
  std::size_t max_states = CountOptions{}.max_states;
  unsigned threads = 0;   // 0 = hardware concurrency
  std::optional<std::size_t> verify_cache;
};

void print_sequence(std::ostream& out, const std::vector<Count>& values, int first,
                    const std::string& format) {
  if (format == "bfile") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << first + static_cast<int>(i) << ' ' << to_decimal(values[i]) << '\n';
    }
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Count& c : values) arr.push_back(to_decimal(c));
    out << arr.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << to_decimal(values[i]);
    out << '\n';
  }
}

int exit_for(Status s) {
  switch (s) {
    case Status::holds_on_range: return kExitOk;
    case Status::fails: return kExitFails;
    case Status::insufficient_data: return kExitInsufficient;
  }
  return kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tiling counts for Aztec diamonds and rectangles, with 2-adic checks"};
  app.set_help_all_flag("--help-all");
  GlobalFlags g;
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the result cache");
  app.add_option("--cache", g.cache_path, "Cache file (default $TILINGS_CACHE or ./tilings-cache.json)");
  app.add_option("--time-limit", g.time_limit, "Abort counting after this many seconds (exit 3)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-states", g.max_states, "Abort when a frontier exceeds this many states (exit 3)");
  app.add_option("--threads", g.threads, "Worker threads across sequence indices and survey rows");
  app.add_option("--verify-cache", g.verify_cache, "Recompute up to N cached entries and compare");
  app.require_subcommand(0, 1);

  // count
  std::string region_spec, tiles_spec;
  bool show_stats = false;
  auto* count_cmd = app.add_subcommand("count", "Weighted tiling count of one region");
  count_cmd->add_option("--region", region_spec, "aztec:N, aztechalf:N:top|bottom, rect:WxH")->required();
  count_cmd->add_option("--tiles", tiles_spec, "Six-bit code or shape list, e.g. skew:h,square")->required();
  count_cmd->add_flag("--stats", show_stats, "Report frontier statistics on stderr");

  // sequence
  std::string family_spec, format = "plain";
  int n_from = 0, n_to = 0;
  auto* seq_cmd = app.add_subcommand("sequence", "Counts over a region family");
  seq_cmd->add_option("--family", family_spec, "aztec, rect2nx2n, rect2nx2n+2, rect2nx4n")->required();
  seq_cmd->add_option("--tiles", tiles_spec, "Tile spec")->required();
  seq_cmd->add_option("--from", n_from, "First n")->required()->check(CLI::NonNegativeNumber);
  seq_cmd->add_option("--to", n_to, "Last n")->required()->check(CLI::NonNegativeNumber);
  seq_cmd->add_option("--format", format, "plain, bfile or json")
      ->check(CLI::IsMember({"plain", "bfile", "json"}));

  // verify
  std::string check_name;
  CheckParams params;
  auto* verify_cmd = app.add_subcommand("verify", "Check a claim on computed terms; prints a JSON verdict");
  verify_cmd->add_option("check", check_name, "Check name")->required();
  verify_cmd->add_option("--max-n", params.max_n, "Largest order used");
  verify_cmd->add_option("--k", params.k, "Largest power of two exponent");
  verify_cmd->add_option("--domino-max-n", params.domino_max_n, "rect-mod8: largest n for domino residues");

  // survey
  int survey_max_n = kDefaultSurveyMaxN;
  std::string survey_format = "plain";
  bool compare = false;
  auto* survey_cmd = app.add_subcommand("survey", "All 63 six-bit tile codes on Aztec orders 1..N");
  survey_cmd->add_option("--max-n", survey_max_n, "Largest order");
  survey_cmd->add_option("--format", survey_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  survey_cmd->add_flag("--compare", compare, "Append the verdict against the published classifications");

  // graph
  std::string graph_kind, action = "match-count";
  int order = 0;
  auto* graph_cmd = app.add_subcommand("graph", "Brick graphs of the all-horizontal domino tiling");
  graph_cmd->add_option("--kind", graph_kind, "doubled-diagonal, triangle or superimposed")->required();
  graph_cmd->add_option("--order", order, "Aztec order")->required();
  graph_cmd->add_option("--action", action, "emit-dot or match-count")
      ->check(CLI::IsMember({"emit-dot", "match-count"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Session session;
  session.options.max_states = g.max_states;
  if (g.time_limit > 0) {
    session.options.deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(g.time_limit));
  }
  session.threads = g.threads ? g.threads : std::max(1u, std::thread::hardware_concurrency());

  std::unique_ptr<ResultStore> store;
  try {
    if (!g.no_cache) {
      store = std::make_unique<ResultStore>(g.cache_path.empty() ? ResultStore::default_path()
                                                                 : std::filesystem::path(g.cache_path));
      session.store = store.get();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  int code = kExitOk;
  try {
    if (g.verify_cache) {
      if (!store) {
        err << "error: --verify-cache needs the cache enabled\n";
        return kExitUsage;
      }
      const CacheCheck check = verify_store(*store, *g.verify_cache, session.options);
      nlohmann::json report = {{"checked", check.checked}, {"mismatches", nlohmann::json::array()}};
      for (const auto& m : check.mismatches) {
        report["mismatches"].push_back({{"region", m.region}, {"tiles", m.tiles}, {"stored", to_decimal(m.count)}});
      }
      out << report.dump(2) << '\n';
      if (!check.mismatches.empty()) return kExitFails;
      if (app.get_subcommands().empty()) return kExitOk;
    }

    if (count_cmd->parsed()) {
      const Region region = parse_region(region_spec);
      const TileSet tiles = parse_tileset(tiles_spec);
      if (show_stats) {
        CountStats stats;
        out << to_decimal(count_weighted(region, tiles, session.options, &stats)) << '\n';
        err << "window=" << stats.window_bits << " peak_states=" << stats.peak_states
            << " transitions=" << stats.transitions << " transposed=" << stats.transposed
            << " limbs=" << stats.limbs << '\n';
      } else {
        out << to_decimal(session.count(region, tiles)) << '\n';
      }
    } else if (seq_cmd->parsed()) {
      if (n_from > n_to) throw ParseError("--from must not exceed --to");
      const Family family = parse_family(family_spec);
      const TileSet tiles = parse_tileset(tiles_spec);
      print_sequence(out, session.family_counts(family, tiles, n_from, n_to), n_from, format);
    } else if (verify_cmd->parsed()) {
      const Verdict v = run_named_check(check_name, params, session);
      out << v.to_json().dump(2) << '\n';
      code = exit_for(v.status);
    } else if (survey_cmd->parsed()) {
      if (survey_max_n < 1) throw ParseError("--max-n must be >= 1");
      if (survey_max_n > kDefaultSurveyMaxN) {
        err << "warning: survey beyond n=" << kDefaultSurveyMaxN
            << " includes very slow unrestricted tetromino cases\n";
      }
      SurveyOptions so;
      so.count = session.options;
      so.store = session.store;
      so.threads = session.threads;
      const std::vector<SurveyRow> rows = run_survey(survey_max_n, so);
      std::optional<Verdict> verdict;
      if (compare) verdict = compare_to_claims(rows);
      if (survey_format == "json") {
        nlohmann::json doc = {{"max_n", survey_max_n}, {"rows", survey_to_json(rows)}};
        if (verdict) doc["verdict"] = verdict->to_json();
        out << doc.dump(2) << '\n';
      } else {
        out << survey_to_text(rows);
        if (verdict) out << verdict->to_json().dump(2) << '\n';
      }
      if (verdict) code = exit_for(verdict->status);
    } else if (graph_cmd->parsed()) {
      if (order < 1) throw ParseError("--order must be >= 1");
      const GraphFamily family = parse_graph_family(graph_kind);
      const MatchGraph graph = family_graph(family, order);
      if (action == "emit-dot") {
        std::string name = graph_kind + "_" + std::to_string(order);
        std::replace(name.begin(), name.end(), '-', '_');
        out << emit_dot(graph, name);
      } else {
        out << to_decimal(count_perfect_matchings(graph)) << '\n';
      }
    } else if (!g.verify_cache) {
      out << app.help();
      code = kExitUsage;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  }

  if (store) {
    try {
      store->save();
    } catch (const std::exception& e) {
      err << "warning: could not save cache: " << e.what() << '\n';
    }
  }
  return code;
}

}  // namespace tilings
