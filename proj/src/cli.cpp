// SPDX-License-Identifier: Apache-2.0

#include "oppm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "oppm/dag.hpp"
#include "oppm/error.hpp"
#include "oppm/gen.hpp"
#include "oppm/io.hpp"
#include "oppm/op_core.hpp"
#include "oppm/oracles.hpp"
#include "oppm/string_match.hpp"
#include "oppm/tree_match.hpp"

namespace oppm::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string pattern_path;
  std::string text_path;
  std::string output_path;
  std::string pattern_output_path;
  bool no_prune = false;
  bool oracle = false;
  bool stats = false;
  bool witness = false;
  std::uint64_t seed = 1;
  std::size_t height = 8;
  std::size_t m = 0;
  std::size_t size = 16;
  Symbol sigma = 4;
  Symbol bench_sigma = 1'000'000;
  double density = 0.3;
  std::vector<std::size_t> heights;
  std::vector<std::size_t> lengths;
};

// Writes to the configured output file, or to `fallback` when none is set.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError(path, 0, 0, "cannot open output file");
  write(file);
}

void print_ids(std::ostream& out, const std::vector<std::size_t>& ids) {
  for (std::size_t id : ids) out << id << '\n';
}

void print_stats(std::ostream& out, const MatchStats& s) {
  out << "goto=" << s.goto_count << " fail=" << s.fail_count << '\n';
}

void reject_stats_with_oracle(const RunConfig& cfg) {
  if (cfg.oracle && cfg.stats) {
    throw UsageError("--stats counts automaton transitions and is unavailable with --oracle");
  }
}

PatternTables load_pattern(const RunConfig& cfg) {
  auto p = io::parse_sequence_file(cfg.pattern_path);
  if (p.empty()) throw ParseError(cfg.pattern_path, 1, 1, "pattern must be non-empty");
  return PatternTables(std::move(p));
}

void match_string_cmd(const RunConfig& cfg, std::ostream& out) {
  reject_stats_with_oracle(cfg);
  const auto tables = load_pattern(cfg);
  const auto text = io::parse_sequence_file(cfg.text_path);
  if (cfg.oracle) {
    print_ids(out, oracle::naive_match_string(tables.values(), text));
    return;
  }
  const auto report = match_string(tables, text);
  print_ids(out, report.end_positions);
  if (cfg.stats) print_stats(out, report.stats);
}

void match_tree_cmd(const RunConfig& cfg, std::ostream& out) {
  reject_stats_with_oracle(cfg);
  const auto tables = load_pattern(cfg);
  const auto tree = io::parse_tree_file(cfg.text_path);
  if (cfg.oracle) {
    print_ids(out, oracle::naive_match_tree(tables.values(), tree));
    return;
  }
  const auto report =
      match_tree(tables, tree, cfg.no_prune ? Pruning::disabled : Pruning::enabled);
  print_ids(out, report.matched_nodes);
  if (cfg.stats) print_stats(out, report.stats);
}

void match_dag_cmd(const RunConfig& cfg, std::ostream& out) {
  const auto tables = load_pattern(cfg);
  const auto dag = io::parse_dag_file(cfg.text_path);
  if (cfg.oracle) {
    if (cfg.witness) throw UsageError("--witness is unavailable with --oracle");
    std::vector<oracle::LabeledArc> arcs;
    for (const DagEdge& e : dag.edges()) arcs.push_back({e.source, e.target, e.label});
    const bool found = oracle::naive_match_graph(tables.values(), dag.vertex_count(), arcs);
    out << (found ? "yes" : "no") << '\n';
    return;
  }
  const auto result = match_dag(tables, dag);
  out << (result.witness ? "yes" : "no") << '\n';
  if (result.witness && cfg.witness) {
    const auto& vs = result.witness->vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
}

void build_dasg_cmd(const RunConfig& cfg, std::ostream& out) {
  const auto t = io::parse_sequence_file(cfg.text_path);
  const auto dag = build_dasg(t);
  emit(cfg.output_path, out, [&](std::ostream& o) { io::write_dag(o, dag); });
}

void opsm_cmd(const RunConfig& cfg, std::ostream& out) {
  const auto p = io::parse_sequence_file(cfg.pattern_path);
  if (p.empty()) throw ParseError(cfg.pattern_path, 1, 1, "pattern must be non-empty");
  const auto t = io::parse_sequence_file(cfg.text_path);
  const bool found = cfg.oracle ? oracle::naive_opsm(p, t) : opsm(p, t);
  out << (found ? "yes" : "no") << '\n';
}

void gen_adversarial_cmd(const RunConfig& cfg, std::ostream& out) {
  const std::size_t m = cfg.m == 0 ? cfg.height - 2 : cfg.m;
  if (cfg.height < 3) throw UsageError("--height must be at least 3");
  const auto inst = gen::adversarial(cfg.height, m);
  emit(cfg.output_path, out, [&](std::ostream& o) { io::write_tree(o, inst.tree); });
  if (!cfg.pattern_output_path.empty()) {
    emit(cfg.pattern_output_path, out,
         [&](std::ostream& o) { io::write_sequence(o, inst.pattern); });
  }
}

void bench_adversarial_cmd(const RunConfig& cfg, std::ostream& out) {
  if (cfg.heights.empty()) throw UsageError("--heights needs at least one value");
  for (std::size_t h : cfg.heights) {
    if (h < 3) throw UsageError("every height must be at least 3");
    if (cfg.m != 0 && cfg.m > h - 2) throw UsageError("--m exceeds height - 2");
  }
  out << "h,N,m,goto,fail_pruned,fail_naive\n";
  for (std::size_t h : cfg.heights) {
    const std::size_t m = cfg.m == 0 ? h - 2 : cfg.m;
    const auto inst = gen::adversarial(h, m);
    const PatternTables tables(inst.pattern);
    const auto pruned = match_tree(tables, inst.tree, Pruning::enabled);
    const auto naive = match_tree(tables, inst.tree, Pruning::disabled);
    out << h << ',' << inst.tree.node_count() << ',' << m << ','
        << pruned.stats.goto_count << ',' << pruned.stats.fail_count << ','
        << naive.stats.fail_count << '\n';
  }
}

void bench_dasg_cmd(const RunConfig& cfg, std::ostream& out) {
  if (cfg.lengths.empty()) throw UsageError("--lengths needs at least one value");
  out << "n,V,E,m,explored,found\n";
  for (std::size_t n : cfg.lengths) {
    if (n == 0) throw UsageError("every length must be positive");
    // A random pattern of half the text length rarely occurs as a
    // subsequence, so the search usually exhausts the graph.
    const std::size_t m = cfg.m == 0 ? std::max<std::size_t>(1, n / 2) : cfg.m;
    const PatternTables tables(gen::random_string(m, cfg.bench_sigma, cfg.seed * 2 + n));
    const auto t = gen::random_string(n, cfg.bench_sigma, cfg.seed * 2 + n + 1);
    const auto dag = build_dasg(t);
    const auto result = match_dag(tables, dag);
    out << n << ',' << dag.vertex_count() << ',' << dag.edges().size() << ','
        << m << ',' << result.explored << ',' << (result.witness ? 1 : 0) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Order-preserving pattern matching on strings, trees and DAGs",
               "oppm"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<void(const RunConfig&, std::ostream&)> action;

  auto add_match = [&](const std::string& name, const std::string& desc,
                       const std::string& text_name,
                       void (*fn)(const RunConfig&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("pattern", cfg.pattern_path, "Pattern file")->required()->check(CLI::ExistingFile);
    sub->add_option(text_name, cfg.text_path, "Text file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--oracle", cfg.oracle, "Use the brute-force reference instead");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* ms = add_match("match-string", "Report end positions of op-matches in a string", "text", match_string_cmd);
  ms->add_flag("--stats", cfg.stats, "Append transition counters");

  auto* mt = add_match("match-tree", "Report end nodes of op-matches in a tree", "tree", match_tree_cmd);
  mt->add_flag("--no-prune", cfg.no_prune, "Disable subtree-height pruning");
  mt->add_flag("--stats", cfg.stats, "Append transition counters");

  auto* md = add_match("match-dag", "Decide whether some DAG path op-matches", "dag", match_dag_cmd);
  md->add_flag("--witness", cfg.witness, "Print the vertices of a matching path");

  add_match("opsm", "Decide order-preserving subsequence matching", "text", opsm_cmd);

  auto* bd = app.add_subcommand("build-dasg", "Write the subsequence DAG of a string");
  bd->add_option("text", cfg.text_path, "String file")->required()->check(CLI::ExistingFile);
  bd->add_option("-o,--output", cfg.output_path, "Output DAG file (default stdout)");
  bd->callback([&] { action = build_dasg_cmd; });

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* ga = gen->add_subcommand("adversarial", "Complete binary tree forcing long failure chains");
  ga->add_option("--height", cfg.height, "Tree height h >= 3")->required();
  ga->add_option("--m", cfg.m, "Pattern length, default h - 2");
  ga->add_option("-o,--output", cfg.output_path, "Tree file (default stdout)");
  ga->add_option("--pattern-out", cfg.pattern_output_path, "Pattern file");
  ga->callback([&] { action = gen_adversarial_cmd; });

  auto add_random = [&](const std::string& name, const std::string& desc,
                        const std::string& size_flag) {
    auto* sub = gen->add_subcommand(name, desc);
    sub->add_option(size_flag, cfg.size, "Size")->required()->check(CLI::PositiveNumber);
    sub->add_option("--sigma", cfg.sigma, "Labels drawn from 1..sigma")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("-o,--output", cfg.output_path, "Output file (default stdout)");
    return sub;
  };
  add_random("random-string", "Uniform random string", "--length")->callback([&] {
    action = [](const RunConfig& c, std::ostream& o) {
      const auto s = gen::random_string(c.size, c.sigma, c.seed);
      emit(c.output_path, o, [&](std::ostream& w) { io::write_sequence(w, s); });
    };
  });
  add_random("random-tree", "Random recursive tree", "--nodes")->callback([&] {
    action = [](const RunConfig& c, std::ostream& o) {
      const auto t = gen::random_tree(c.size, c.sigma, c.seed);
      emit(c.output_path, o, [&](std::ostream& w) { io::write_tree(w, t); });
    };
  });
  auto* gd = add_random("random-dag", "Random DAG over a fixed topological order", "--vertices");
  gd->add_option("--density", cfg.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gd->callback([&] {
    action = [](const RunConfig& c, std::ostream& o) {
      const auto d = gen::random_dag(c.size, c.density, c.sigma, c.seed);
      emit(c.output_path, o, [&](std::ostream& w) { io::write_dag(w, d); });
    };
  });

  auto* bench = app.add_subcommand("bench", "Transition-count experiments as CSV");
  bench->require_subcommand(1);
  auto* ba = bench->add_subcommand("adversarial", "Pruned vs unpruned failure counts");
  ba->add_option("--heights", cfg.heights, "Comma-separated heights")->required()->delimiter(',');
  ba->add_option("--m", cfg.m, "Fixed pattern length, default h - 2 per height");
  ba->callback([&] { action = bench_adversarial_cmd; });
  auto* bs = bench->add_subcommand("dasg", "Explored extensions of the DAG search on subsequence graphs");
  bs->add_option("--lengths", cfg.lengths, "Comma-separated text lengths")->required()->delimiter(',');
  bs->add_option("--m", cfg.m, "Pattern length, default n / 2");
  bs->add_option("--sigma", cfg.bench_sigma, "Text alphabet size")->check(CLI::PositiveNumber);
  bs->add_option("--seed", cfg.seed, "Random seed");
  bs->callback([&] { action = bench_dasg_cmd; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    action(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kSuccess;
}

}  // namespace oppm::cli
