#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coopcolor/construction.hpp"
#include "coopcolor/decomposition.hpp"
#include "coopcolor/errors.hpp"
#include "coopcolor/exact.hpp"
#include "coopcolor/io.hpp"
#include "coopcolor/partition.hpp"
#include "coopcolor/qary.hpp"
#include "coopcolor/solvers.hpp"
#include "coopcolor/treedepth.hpp"

namespace cc = coopcolor;
using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;
constexpr int kExitInternal = 3;

std::uint64_t fnv64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

struct RunContext {
  std::string command_line;
  std::string log_path = "runs.jsonl";
  std::string config_path;
  ordered_json config = ordered_json::object();
  bool ci = false;
  int jobs = 1;
  Clock::time_point start = Clock::now();
  std::vector<std::string> artifacts;
  ordered_json outcome = ordered_json::object();
  ordered_json resolved = ordered_json::object();
  std::optional<std::uint64_t> seed;
};

void append_run_record(const RunContext& ctx) {
  ordered_json rec;
  rec["command"] = ctx.command_line;
  rec["config"] = ctx.resolved;
  if (ctx.seed.has_value()) {
    rec["seed"] = *ctx.seed;
  } else {
    rec["seed"] = nullptr;
  }
  rec["outcome"] = ctx.outcome;
  rec["artifacts"] = ctx.artifacts;
  rec["wall_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - ctx.start).count();
  try {
    std::ofstream log(ctx.log_path, std::ios::app);
    log << rec.dump() << "\n";
  } catch (...) {
    std::cerr << "warning: could not append to run log " << ctx.log_path << "\n";
  }
}

// Config file values fill in flags the user did not pass; explicit flags win.
template <class T>
void overlay(const CLI::Option* opt, const ordered_json& cfg, const std::string& key, T& var) {
  if (opt != nullptr && opt->count() == 0 && cfg.contains(key)) {
    var = cfg.at(key).get<T>();
  }
}

ordered_json outcome_json(const cc::SearchOutcome& r, bool with_wall) {
  ordered_json j;
  j["status"] = cc::to_string(r.status);
  j["nodes"] = r.stats.nodes;
  j["propagations"] = r.stats.propagations;
  j["resamples"] = r.stats.resamples;
  j["budget_hit"] = r.stats.budget_hit;
  if (with_wall) j["wall_ms"] = r.stats.wall_ms;
  if (r.lll.has_value()) {
    j["lll"] = ordered_json{{"p", r.lll->p}, {"D", r.lll->D}, {"satisfied", r.lll->satisfied}};
  }
  return j;
}

std::vector<std::string> labels_of(const cc::Instance& inst, const std::vector<cc::Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (cc::Vertex v : vs) out.push_back(inst.label_of(v));
  return out;
}

std::string replace_extension(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  p.replace_extension();
  return p.string() + suffix;
}

void emit(const ordered_json& record, bool as_json, const std::string& human) {
  if (as_json) {
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << human << "\n";
  }
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[mid];
  return (xs[mid - 1] + xs[mid]) / 2.0;
}

ordered_json forest_json(const cc::Instance& inst, const cc::RootedForest& f, bool label_parts) {
  ordered_json j = ordered_json::object();
  for (cc::Vertex v : f.vertices()) {
    std::string key = label_parts ? "part_" + std::to_string(v) : inst.label_of(v);
    cc::Vertex p = f.parent_of(v);
    if (p == -1) {
      j[key] = nullptr;
    } else {
      j[key] = label_parts ? "part_" + std::to_string(p) : inst.label_of(p);
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  RunContext ctx;
  {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    ctx.command_line = cmd.str();
  }

  CLI::App app{"cooperative coloring toolkit"};
  app.require_subcommand(1);
  auto* opt_config = app.add_option("--config", ctx.config_path,
                                    "JSON config supplying defaults; explicit flags win");
  auto* opt_log = app.add_option("--log", ctx.log_path, "run-record log (JSON lines, appended)");
  app.add_flag("--ci", ctx.ci, "CI mode: randomized commands must pass --seed");
  auto* opt_jobs = app.add_option("--jobs", ctx.jobs, "max parallel workers for bench cells");

  // gen-construction
  int gc_t = 1, gc_cap = 8;
  bool gc_family = false, gc_stats_only = false, gc_claim = false, gc_json = false;
  std::string gc_dot, gc_out;
  auto* gen_construction =
      app.add_subcommand("gen-construction", "materialize the recursive counterexample family");
  gen_construction->add_option("--t", gc_t, "recursion level")->required();
  auto* gc_cap_opt = gen_construction->add_option("--cap", gc_cap, "construction size cap");
  gen_construction->add_flag("--family", gc_family, "also write the star-family instance copy");
  gen_construction->add_option("--dot", gc_dot, "write a DOT rendering here");
  gen_construction->add_flag("--stats-only", gc_stats_only, "emit counts only, no graph");
  gen_construction->add_flag("--witness-claim", gc_claim,
                             "emit the lower-bound claim implied by this instance");
  gen_construction->add_option("--out", gc_out, "instance output path");
  gen_construction->add_flag("--json", gc_json, "print the full record as JSON");

  // gen-random
  int gr_n = 0, gr_k = 0, gr_d = 0;
  std::uint64_t gr_seed = 0;
  std::string gr_out;
  bool gr_json = false;
  auto* gen_random = app.add_subcommand("gen-random", "sample a random star-forest family");
  gen_random->add_option("--n", gr_n, "vertex count")->required();
  gen_random->add_option("--k", gr_k, "member count")->required();
  gen_random->add_option("--d", gr_d, "max star size")->required();
  auto* gr_seed_opt = gen_random->add_option("--seed", gr_seed, "sampling seed");
  gen_random->add_option("--out", gr_out, "instance output path");
  gen_random->add_flag("--json", gr_json, "print the full record as JSON");

  // solve
  std::string sv_instance, sv_solver = "exact", sv_split = "star", sv_sub = "greedy";
  std::string sv_witness_out;
  std::uint64_t sv_seed = 0, sv_cap = 1'000'000, sv_budget_nodes = 10'000'000;
  double sv_epsilon = 0.5, sv_budget_seconds = 0.0;
  int sv_inventory = 1, sv_q = 2, sv_h = 2, sv_portfolio = 1;
  bool sv_json = false;
  auto* solve = app.add_subcommand("solve", "run a solver on an instance");
  solve->set_help_flag("--help", "print help");
  solve->add_option("--instance", sv_instance, "instance file")->required();
  solve->add_option("--solver", sv_solver, "greedy|lll|star-partition|partition|exact")
      ->check(CLI::IsMember({"greedy", "lll", "star-partition", "partition", "exact"}));
  auto* sv_seed_opt = solve->add_option("--seed", sv_seed, "solver seed");
  auto* sv_eps_opt = solve->add_option("--epsilon", sv_epsilon, "heavy-vertex threshold factor");
  auto* sv_cap_opt = solve->add_option("--cap", sv_cap, "resample cap");
  auto* sv_inv_opt = solve->add_option("--inventory", sv_inventory, "inventory size (generic)");
  solve->add_option("--split", sv_split, "partition splitter: star|threshold")
      ->check(CLI::IsMember({"star", "threshold"}));
  solve->add_option("--sub", sv_sub, "partition sub-solver: greedy|lll|exact")
      ->check(CLI::IsMember({"greedy", "lll", "exact"}));
  solve->add_option("--q", sv_q, "threshold splitter q");
  solve->add_option("--h", sv_h, "threshold splitter h");
  auto* sv_bn_opt = solve->add_option("--budget-nodes", sv_budget_nodes, "exact search node cap");
  auto* sv_bs_opt =
      solve->add_option("--budget-seconds", sv_budget_seconds, "exact search time cap");
  auto* sv_pf_opt = solve->add_option("--portfolio", sv_portfolio, "parallel exact workers");
  solve->add_option("--witness-out", sv_witness_out, "where to write a Sat witness");
  solve->add_flag("--json", sv_json, "print the full record as JSON");

  // verify
  std::string vf_instance, vf_coloring;
  bool vf_json = false;
  auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
  verify->add_option("--instance", vf_instance, "instance file")->required();
  verify->add_option("--coloring", vf_coloring, "coloring file")->required();
  verify->add_flag("--json", vf_json, "print the full record as JSON");

  // certify-unsat
  std::string cu_instance, cu_out;
  std::uint64_t cu_budget_nodes = 10'000'000, cu_seed = 0;
  double cu_budget_seconds = 0.0;
  int cu_portfolio = 1;
  bool cu_json = false;
  auto* certify = app.add_subcommand("certify-unsat", "exhaustive search with certificate");
  certify->add_option("--instance", cu_instance, "instance file")->required();
  auto* cu_bn_opt = certify->add_option("--budget-nodes", cu_budget_nodes, "node budget");
  auto* cu_bs_opt = certify->add_option("--budget-seconds", cu_budget_seconds, "time budget");
  auto* cu_pf_opt = certify->add_option("--portfolio", cu_portfolio, "parallel workers");
  auto* cu_seed_opt = certify->add_option("--seed", cu_seed, "portfolio tie-order seed");
  certify->add_option("--out", cu_out, "certificate output path");
  certify->add_flag("--json", cu_json, "print the certificate to stdout as JSON");

  // decompose
  std::string dc_instance, dc_method = "star", dc_parts, dc_out;
  int dc_q = 2, dc_h = 2, dc_member = 1, dc_hcap = 14;
  bool dc_audit = false, dc_json = false;
  auto* decompose = app.add_subcommand("decompose", "structural vertex splits");
  decompose->set_help_flag("--help", "print help");
  decompose->add_option("--instance", dc_instance, "instance file")->required();
  decompose->add_option("--method", dc_method, "star|threshold|quotient")
      ->check(CLI::IsMember({"star", "threshold", "quotient"}));
  decompose->add_option("--q", dc_q, "threshold/audit q");
  decompose->add_option("--h", dc_h, "threshold/audit h");
  decompose->add_option("--parts", dc_parts, "JSON file of label lists (quotient parts)");
  decompose->add_option("--member", dc_member, "1-based member for quotient method");
  decompose->add_option("--h-cap", dc_hcap, "max allowed quotient component treedepth");
  decompose->add_flag("--audit-tree-free", dc_audit,
                      "also search each member for the q-ary tree of height h");
  decompose->add_option("--out", dc_out, "write the decomposition record here");
  decompose->add_flag("--json", dc_json, "print the full record as JSON");

  // export-dot
  std::string xd_instance, xd_coloring, xd_out;
  auto* export_dot = app.add_subcommand("export-dot", "render an instance to DOT");
  export_dot->add_option("--instance", xd_instance, "instance file")->required();
  export_dot->add_option("--coloring", xd_coloring, "optional coloring to display");
  export_dot->add_option("--out", xd_out, "output path")->required();

  // bench
  std::string bn_suite, bn_seeds, bn_csv, bn_json_path;
  bool bn_json = false;
  auto* bench = app.add_subcommand("bench", "solver/instance benchmark matrices");
  bench->add_option("--suite", bn_suite, "lll-2ed | star-partition-scaling")->required();
  bench->add_option("--seeds", bn_seeds, "comma-separated seed list")->required();
  bench->add_option("--out-csv", bn_csv, "CSV table output path");
  bench->add_option("--out-json", bn_json_path, "JSON table output path");
  bench->add_flag("--json", bn_json, "print the JSON table to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (opt_config->count() > 0) {
      ctx.config = ordered_json::parse(cc::read_text_file(ctx.config_path));
      if (!ctx.config.is_object()) throw cc::ContractError("config must be a JSON object");
    }
    overlay(opt_log, ctx.config, "log", ctx.log_path);
    overlay(opt_jobs, ctx.config, "jobs", ctx.jobs);
    if (ctx.jobs < 1) throw cc::ContractError("--jobs must be positive");

    auto require_ci_seed = [&](const CLI::Option* seed_opt, const char* what) {
      if (ctx.ci && seed_opt->count() == 0 && !ctx.config.contains("seed")) {
        std::cerr << "error: --ci requires an explicit --seed for " << what << "\n";
        std::exit(kExitUsage);
      }
    };

    if (gen_construction->parsed()) {
      overlay(gc_cap_opt, ctx.config, "cap", gc_cap);
      ctx.resolved = {{"t", gc_t}, {"cap", gc_cap}, {"family", gc_family},
                      {"stats_only", gc_stats_only}, {"witness_claim", gc_claim}};
      cc::ConstructionStats stats = cc::construction_stats(gc_t);
      ordered_json rec;
      rec["t"] = stats.t;
      rec["vertex_count"] = stats.vertex_count;
      rec["max_mono_degree"] = stats.max_mono_degree;
      rec["edge_count"] = stats.edge_count;
      if (gc_claim) {
        rec["witness_claim"] = "m_S(" + std::to_string(stats.max_mono_degree) +
                               ") >= " + std::to_string(gc_t + 1);
      }
      if (!gc_stats_only) {
        cc::LabeledConstruction c = cc::build_construction(gc_t, gc_cap);
        cc::Instance inst(cc::extract_star_family(c));
        std::string out = gc_out.empty()
                              ? "construction_t" + std::to_string(gc_t) + ".json"
                              : gc_out;
        cc::save_instance(inst, out);
        ctx.artifacts.push_back(out);
        rec["instance"] = out;
        if (gc_family) {
          std::string fam_out = replace_extension(out, ".family.json");
          cc::save_instance(inst, fam_out);
          ctx.artifacts.push_back(fam_out);
          rec["family_instance"] = fam_out;
        }
        if (!gc_dot.empty()) {
          cc::write_text_file(gc_dot, cc::to_dot(inst));
          ctx.artifacts.push_back(gc_dot);
          rec["dot"] = gc_dot;
        }
      }
      ctx.outcome = rec;
      emit(rec, gc_json,
           "t=" + std::to_string(stats.t) + " vertices=" + std::to_string(stats.vertex_count) +
               " max_mono_degree=" + std::to_string(stats.max_mono_degree) +
               " edges=" + std::to_string(stats.edge_count) +
               (rec.contains("instance") ? " -> " + rec["instance"].get<std::string>() : ""));
      append_run_record(ctx);
      return 0;
    }

    if (gen_random->parsed()) {
      require_ci_seed(gr_seed_opt, "gen-random");
      overlay(gr_seed_opt, ctx.config, "seed", gr_seed);
      ctx.seed = gr_seed;
      ctx.resolved = {{"n", gr_n}, {"k", gr_k}, {"d", gr_d}, {"seed", gr_seed}};
      cc::GraphFamily fam = cc::sample_random_star_family(gr_n, gr_k, gr_d, gr_seed);
      cc::Instance inst(std::move(fam));
      std::string out = gr_out.empty()
                            ? "random_n" + std::to_string(gr_n) + "_k" + std::to_string(gr_k) +
                                  "_d" + std::to_string(gr_d) + "_s" + std::to_string(gr_seed) +
                                  ".json"
                            : gr_out;
      cc::save_instance(inst, out);
      ctx.artifacts.push_back(out);
      ordered_json rec{{"instance", out},
                       {"n", gr_n},
                       {"k", gr_k},
                       {"d", gr_d},
                       {"seed", gr_seed}};
      ctx.outcome = rec;
      emit(rec, gr_json, "wrote " + out);
      append_run_record(ctx);
      return 0;
    }

    if (solve->parsed()) {
      bool randomized = sv_solver == "lll" || sv_solver == "star-partition" ||
                        sv_solver == "partition";
      if (randomized) require_ci_seed(sv_seed_opt, "randomized solvers");
      overlay(sv_seed_opt, ctx.config, "seed", sv_seed);
      overlay(sv_eps_opt, ctx.config, "epsilon", sv_epsilon);
      overlay(sv_cap_opt, ctx.config, "cap", sv_cap);
      overlay(sv_inv_opt, ctx.config, "inventory", sv_inventory);
      overlay(sv_bn_opt, ctx.config, "budget-nodes", sv_budget_nodes);
      overlay(sv_bs_opt, ctx.config, "budget-seconds", sv_budget_seconds);
      overlay(sv_pf_opt, ctx.config, "portfolio", sv_portfolio);
      ctx.seed = sv_seed;
      ctx.resolved = {{"instance", sv_instance}, {"solver", sv_solver},
                      {"seed", sv_seed},         {"epsilon", sv_epsilon},
                      {"cap", sv_cap},           {"inventory", sv_inventory},
                      {"split", sv_split},       {"sub", sv_sub},
                      {"budget_nodes", sv_budget_nodes},
                      {"budget_seconds", sv_budget_seconds},
                      {"portfolio", sv_portfolio}};
      cc::Instance inst = cc::load_instance(sv_instance);
      cc::SolverParams params;
      params.seed = sv_seed;
      params.epsilon = sv_epsilon;
      params.resample_cap = sv_cap;
      params.inventory_size = sv_inventory;
      cc::Budget budget{sv_budget_nodes, sv_budget_seconds};
      cc::SearchOutcome r;
      if (sv_solver == "greedy") {
        r = cc::greedy_solve(inst.family());
      } else if (sv_solver == "lll") {
        r = cc::lll_solve(inst.family(), params);
      } else if (sv_solver == "star-partition") {
        r = cc::star_partition_solve(inst.family(), params);
      } else if (sv_solver == "partition") {
        cc::Splitter splitter;
        if (sv_split == "star") {
          splitter = [](const cc::Graph& g) { return cc::star_split(g); };
        } else {
          int q = sv_q, h = sv_h;
          splitter = [q, h](const cc::Graph& g) { return cc::threshold_split(g, q, h); };
        }
        cc::SubSolver sub;
        if (sv_sub == "greedy") {
          sub = [](const cc::GraphFamily& f, const cc::SolverParams&) {
            return cc::greedy_solve(f);
          };
        } else if (sv_sub == "lll") {
          sub = [](const cc::GraphFamily& f, const cc::SolverParams& p) {
            return cc::lll_solve(f, p);
          };
        } else {
          sub = [budget](const cc::GraphFamily& f, const cc::SolverParams&) {
            return cc::solve_cooperative_exact(f, budget);
          };
        }
        r = cc::partition_solve_generic(inst.family(), splitter, sub, sub, params);
      } else {
        r = sv_portfolio > 1
                ? cc::solve_cooperative_portfolio(inst.family(), budget, sv_portfolio, sv_seed)
                : cc::solve_cooperative_exact(inst.family(), budget);
      }
      ordered_json rec = outcome_json(r, true);
      rec["solver"] = sv_solver;
      rec["instance"] = sv_instance;
      if (r.status == cc::Status::Sat) {
        std::string wout = sv_witness_out.empty()
                               ? replace_extension(sv_instance, ".witness.json")
                               : sv_witness_out;
        cc::write_text_file(wout, cc::serialize_coloring(inst, *r.witness));
        ctx.artifacts.push_back(wout);
        rec["witness"] = wout;
      }
      ctx.outcome = rec;
      emit(rec, sv_json,
           sv_solver + " on " + sv_instance + ": " + cc::to_string(r.status) +
               " (nodes=" + std::to_string(r.stats.nodes) +
               ", resamples=" + std::to_string(r.stats.resamples) + ")");
      append_run_record(ctx);
      return 0;
    }

    if (verify->parsed()) {
      ctx.resolved = {{"instance", vf_instance}, {"coloring", vf_coloring}};
      cc::Instance inst = cc::load_instance(vf_instance);
      cc::CooperativeColoring c = cc::parse_coloring(inst, cc::read_text_file(vf_coloring));
      std::string why;
      bool ok = cc::verify_cooperative(inst.family(), c, &why);
      ordered_json rec{{"valid", ok}};
      if (!ok) rec["reason"] = why;
      ctx.outcome = rec;
      emit(rec, vf_json, ok ? "valid" : "invalid: " + why);
      append_run_record(ctx);
      return ok ? 0 : kExitContract;
    }

    if (certify->parsed()) {
      overlay(cu_bn_opt, ctx.config, "budget-nodes", cu_budget_nodes);
      overlay(cu_bs_opt, ctx.config, "budget-seconds", cu_budget_seconds);
      overlay(cu_pf_opt, ctx.config, "portfolio", cu_portfolio);
      overlay(cu_seed_opt, ctx.config, "seed", cu_seed);
      ctx.seed = cu_seed;
      ctx.resolved = {{"instance", cu_instance},
                      {"budget_nodes", cu_budget_nodes},
                      {"budget_seconds", cu_budget_seconds},
                      {"portfolio", cu_portfolio},
                      {"seed", cu_seed}};
      std::string text = cc::read_text_file(cu_instance);
      cc::Instance inst = cc::parse_instance(text);
      cc::Budget budget{cu_budget_nodes, cu_budget_seconds};
      cc::SearchOutcome r =
          cc::solve_cooperative_portfolio(inst.family(), budget, cu_portfolio, cu_seed);
      ordered_json cert;
      cert["instance"] = cu_instance;
      cert["instance_fingerprint"] = hex64(fnv64(cc::serialize_instance(inst)));
      cert["palette"] = "per-vertex memberships";
      cert["status"] = cc::to_string(r.status);
      cert["budget"] = ordered_json{{"nodes", cu_budget_nodes}, {"seconds", cu_budget_seconds}};
      cert["portfolio"] = cu_portfolio;
      ordered_json order;
      order["variable"] = "mrv,tie=lowest-id";
      order["value"] = "ascending-color";
      if (cu_portfolio > 1) order["portfolio_tie_seed"] = cu_seed;
      cert["search_order"] = order;
      // Node counts are racy across portfolio workers, so only the
      // single-worker certificate carries them (certificates must be
      // byte-reproducible).
      if (cu_portfolio == 1) {
        cert["nodes"] = r.stats.nodes;
        cert["propagations"] = r.stats.propagations;
        cert["budget_hit"] = r.stats.budget_hit;
      }
      std::string out = cu_out.empty() ? replace_extension(cu_instance, ".cert.json") : cu_out;
      cc::write_text_file(out, cert.dump(2) + "\n");
      ctx.artifacts.push_back(out);
      ordered_json rec = cert;
      rec["certificate"] = out;
      rec["wall_ms"] = r.stats.wall_ms;
      ctx.outcome = rec;
      emit(rec, cu_json,
           cu_instance + ": " + cc::to_string(r.status) + " -> " + out);
      append_run_record(ctx);
      return 0;
    }

    if (decompose->parsed()) {
      ctx.resolved = {{"instance", dc_instance}, {"method", dc_method}, {"q", dc_q},
                      {"h", dc_h},               {"member", dc_member}, {"h_cap", dc_hcap},
                      {"audit_tree_free", dc_audit}};
      cc::Instance inst = cc::load_instance(dc_instance);
      ordered_json rec;
      rec["method"] = dc_method;
      if (dc_method == "star" || dc_method == "threshold") {
        ordered_json splits = ordered_json::array();
        for (int i = 1; i <= inst.family().size(); ++i) {
          const cc::Graph& g = inst.family().member(i);
          cc::Split s = dc_method == "star" ? cc::star_split(g)
                                            : cc::threshold_split(g, dc_q, dc_h);
          ordered_json entry;
          entry["member"] = i;
          entry["name"] = inst.member_names()[static_cast<std::size_t>(i - 1)];
          entry["a"] = labels_of(inst, s.a());
          entry["b"] = labels_of(inst, s.b());
          entry["neighbor_bound"] = s.neighbor_bound();
          if (dc_audit) {
            cc::SearchOutcome probe = cc::find_qary_tree(g, dc_q, dc_h);
            entry["qary_tree_in_host"] = cc::to_string(probe.status);
          }
          splits.push_back(std::move(entry));
        }
        rec["splits"] = std::move(splits);
      } else {
        const cc::Graph& g = inst.family().member(dc_member);
        std::vector<std::vector<cc::Vertex>> parts;
        if (dc_parts.empty()) {
          for (cc::Vertex v : g.vertices()) parts.push_back({v});
        } else {
          ordered_json pj = ordered_json::parse(cc::read_text_file(dc_parts));
          if (!pj.is_array()) throw cc::ContractError("parts file must be a JSON array");
          for (const auto& plist : pj) {
            std::vector<cc::Vertex> part;
            for (const auto& label : plist) {
              part.push_back(inst.vertex_of(label.get<std::string>()));
            }
            parts.push_back(std::move(part));
          }
        }
        cc::QuotientInstance qi = cc::build_quotient_instance(g, parts, dc_hcap);
        cc::QuotientSplit qs = cc::quotient_split(qi);
        rec["member"] = dc_member;
        rec["max_part_size"] = qi.max_part_size;
        ordered_json qedges = ordered_json::array();
        for (const cc::Edge& e : qi.quotient_graph.edges()) {
          qedges.push_back(ordered_json::array(
              {"part_" + std::to_string(e.u), "part_" + std::to_string(e.v)}));
        }
        rec["quotient_edges"] = std::move(qedges);
        rec["elimination_forest"] = forest_json(inst, qi.elimination_forest, true);
        rec["forest_height"] = qi.elimination_forest.height();
        ordered_json split;
        split["a"] = labels_of(inst, qs.split.a());
        split["b"] = labels_of(inst, qs.split.b());
        split["neighbor_bound"] = qs.split.neighbor_bound();
        rec["split"] = std::move(split);
        ordered_json comps = ordered_json::array();
        for (const cc::RootedForest& f : qs.component_forests) {
          comps.push_back(ordered_json{{"forest", forest_json(inst, f, true)},
                                       {"height", f.height()}});
        }
        rec["component_forests"] = std::move(comps);
      }
      if (!dc_out.empty()) {
        cc::write_text_file(dc_out, rec.dump(2) + "\n");
        ctx.artifacts.push_back(dc_out);
      }
      ctx.outcome = rec;
      emit(rec, dc_json || dc_out.empty(), "wrote " + dc_out);
      append_run_record(ctx);
      return 0;
    }

    if (export_dot->parsed()) {
      ctx.resolved = {{"instance", xd_instance}, {"coloring", xd_coloring}, {"out", xd_out}};
      cc::Instance inst = cc::load_instance(xd_instance);
      std::string dot;
      if (xd_coloring.empty()) {
        dot = cc::to_dot(inst);
      } else {
        cc::CooperativeColoring c = cc::parse_coloring(inst, cc::read_text_file(xd_coloring));
        dot = cc::to_dot(inst, &c);
      }
      cc::write_text_file(xd_out, dot);
      ctx.artifacts.push_back(xd_out);
      ctx.outcome = {{"dot", xd_out}};
      std::cout << "wrote " << xd_out << "\n";
      append_run_record(ctx);
      return 0;
    }

    if (bench->parsed()) {
      std::vector<std::uint64_t> seeds;
      {
        std::stringstream ss(bn_seeds);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (!tok.empty()) seeds.push_back(std::stoull(tok));
        }
      }
      if (seeds.empty()) {
        std::cerr << "error: bench needs a nonempty --seeds list\n";
        return kExitUsage;
      }
      ctx.resolved = {{"suite", bn_suite}, {"seeds", seeds}, {"jobs", ctx.jobs}};

      struct Cell {
        int d = 0;
        int k = 0;
        int n = 0;
      };
      std::vector<Cell> cells;
      if (bn_suite == "lll-2ed") {
        for (int d : {4, 8, 16}) {
          int k = static_cast<int>(std::ceil(2 * std::numbers::e * d));
          cells.push_back({d, k, 200});
        }
      } else if (bn_suite == "star-partition-scaling") {
        for (int d : {100, 1000}) {
          for (int l = 2; l <= 16; ++l) cells.push_back({d, l, 10'000});
        }
      } else {
        std::cerr << "error: unknown suite '" << bn_suite << "'\n";
        return kExitUsage;
      }

      struct Row {
        Cell cell;
        int sat = 0;
        std::vector<double> resamples;
        std::vector<double> wall;
      };
      std::vector<Row> rows(cells.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) break;
          Row row;
          row.cell = cells[i];
          for (std::uint64_t seed : seeds) {
            cc::GraphFamily fam = cc::sample_random_star_family(row.cell.n, row.cell.k,
                                                                row.cell.d, seed);
            cc::SolverParams params;
            params.seed = seed;
            cc::SearchOutcome r = bn_suite == "lll-2ed"
                                      ? cc::lll_solve(fam, params)
                                      : cc::star_partition_solve(fam, params);
            if (r.status == cc::Status::Sat) ++row.sat;
            row.resamples.push_back(static_cast<double>(r.stats.resamples));
            row.wall.push_back(r.stats.wall_ms);
          }
          rows[i] = std::move(row);
        }
      };
      std::vector<std::thread> pool;
      int nthreads = std::min<int>(ctx.jobs, static_cast<int>(cells.size()));
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      ordered_json table = ordered_json::array();
      std::ostringstream csv;
      const char* kparam = bn_suite == "lll-2ed" ? "k" : "l";
      csv << "suite,n,d," << kparam << ",runs,sat,success_rate,median_resamples,mean_wall_ms\n";
      for (const Row& row : rows) {
        double rate = static_cast<double>(row.sat) / static_cast<double>(seeds.size());
        double mean_wall = 0;
        for (double w : row.wall) mean_wall += w;
        mean_wall /= static_cast<double>(row.wall.size());
        ordered_json entry;
        entry["suite"] = bn_suite;
        entry["n"] = row.cell.n;
        entry["d"] = row.cell.d;
        entry[kparam] = row.cell.k;
        entry["runs"] = seeds.size();
        entry["sat"] = row.sat;
        entry["success_rate"] = rate;
        entry["median_resamples"] = median(row.resamples);
        entry["mean_wall_ms"] = mean_wall;
        table.push_back(entry);
        csv << bn_suite << "," << row.cell.n << "," << row.cell.d << "," << row.cell.k << ","
            << seeds.size() << "," << row.sat << "," << rate << "," << median(row.resamples)
            << "," << mean_wall << "\n";
      }
      if (!bn_csv.empty()) {
        cc::write_text_file(bn_csv, csv.str());
        ctx.artifacts.push_back(bn_csv);
      }
      if (!bn_json_path.empty()) {
        cc::write_text_file(bn_json_path, table.dump(2) + "\n");
        ctx.artifacts.push_back(bn_json_path);
      }
      ctx.outcome = {{"suite", bn_suite}, {"cells", table.size()}};
      if (bn_json || (bn_csv.empty() && bn_json_path.empty())) {
        std::cout << table.dump(2) << "\n";
      } else {
        std::cout << "bench " << bn_suite << ": " << table.size() << " cells\n";
      }
      append_run_record(ctx);
      return 0;
    }

    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const cc::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    ctx.outcome = {{"error", e.what()}, {"exit", kExitInternal}};
    append_run_record(ctx);
    return kExitInternal;
  } catch (const cc::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    ctx.outcome = {{"error", e.what()}, {"exit", kExitContract}};
    append_run_record(ctx);
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    ctx.outcome = {{"error", e.what()}, {"exit", kExitInternal}};
    append_run_record(ctx);
    return kExitInternal;
  }
}
