#include "sparse_ssa/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparse_ssa/driver.hpp"
#include "sparse_ssa/errors.hpp"
#include "sparse_ssa/io.hpp"
#include "sparse_ssa/oracle.hpp"

namespace sparse_ssa {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : Error {
  using Error::Error;
};

struct InputFlags {
  std::string text;
  std::string positions;
  long long b = -1;
  std::uint64_t seed = 1;
  std::string algo = "param";
  long long s = -1;
  long long jstart = -1;
};

struct Inputs {
  Text text;
  PositionSet positions;
  RunConfig cfg;
};

struct AlgoRun {
  SsaSlcp arrays;
  RunStats stats;
  std::optional<ParamStats> param;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--text", f.text, "Text file (raw bytes)")->required();
  auto* pos = cmd->add_option("--positions", f.positions,
                              "Positions file, one 1-based integer per line");
  auto* b = cmd->add_option("--b", f.b, "Number of positions to sample uniformly");
  pos->excludes(b);
  cmd->add_option("--seed", f.seed, "Root seed for sampling and hashing");
  cmd->add_option("--algo", f.algo, "main | param | naive");
  cmd->add_option("--s", f.s, "Fingerprint samples s in [b, n] (default b)");
  cmd->add_option("--jstart", f.jstart, "Override the starting refinement round");
}

void check_algo(const std::string& algo) {
  if (algo != "main" && algo != "param" && algo != "naive")
    throw UsageError("--algo: unknown algorithm '" + algo + "' (main|param|naive)");
}

RunConfig make_config(const InputFlags& f, std::size_t b, std::size_t n) {
  RunConfig cfg;
  cfg.seed = f.seed;
  if (f.s != -1) {
    if (f.s < 0 || static_cast<std::size_t>(f.s) < b || static_cast<std::size_t>(f.s) > n)
      throw UsageError("--s: value " + std::to_string(f.s) + " outside [b, n] = [" +
                       std::to_string(b) + ", " + std::to_string(n) + "]");
    cfg.samples = static_cast<std::size_t>(f.s);
  }
  if (f.jstart != -1) {
    if (f.jstart < 0 || f.jstart > 62)
      throw UsageError("--jstart: value " + std::to_string(f.jstart) +
                       " outside [0, 62]");
    cfg.j_start_override = static_cast<unsigned>(f.jstart);
  }
  return cfg;
}

Inputs load_inputs(const InputFlags& f, bool sampled_needs_seed_flag,
                   const CLI::App* cmd) {
  check_algo(f.algo);
  if (f.positions.empty() && f.b == -1)
    throw UsageError("--positions or --b is required");
  if (f.b != -1 && f.b < 1)
    throw UsageError("--b: value " + std::to_string(f.b) + " must be >= 1");
  if (f.b != -1 && sampled_needs_seed_flag && cmd->count("--seed") == 0)
    throw UsageError("--b: requires --seed");

  Text text = load_text(f.text);
  const std::size_t n = text.size();
  std::optional<PositionSet> positions;
  if (!f.positions.empty()) {
    positions.emplace(load_positions(f.positions, n));
  } else {
    if (static_cast<std::size_t>(f.b) > n)
      throw UsageError("--b: value " + std::to_string(f.b) +
                       " exceeds text length " + std::to_string(n));
    positions.emplace(sample_positions(n, static_cast<std::size_t>(f.b),
                                       derive_seeds(f.seed).positions));
  }
  RunConfig cfg = make_config(f, positions->size(), n);
  return Inputs{std::move(text), std::move(*positions), cfg};
}

AlgoRun run_algorithm(const std::string& algo, const Text& text,
                      const PositionSet& positions, const RunConfig& cfg) {
  AlgoRun run;
  if (algo == "main") {
    run.arrays = main_algo(text, positions, cfg, std::nullopt, &run.stats);
  } else if (algo == "param") {
    ParamResult r = parameterized_algo(text, positions, cfg, &run.stats);
    run.arrays = std::move(r.arrays);
    run.param = std::move(r.stats);
  } else {
    const auto t = std::chrono::steady_clock::now();
    run.arrays = naive_ssa_slcp(text, positions);
    run.stats.total_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t)
                             .count();
  }
  return run;
}

std::size_t threshold_for(const RunConfig& cfg, std::size_t n, std::size_t b) {
  return certified_lcp_cap(cfg.j_start_override.value_or(floor_log2(n / b)));
}

std::size_t b_prime_of(const AlgoRun& run, std::size_t ell) {
  return run.param ? run.param->b_prime : compute_b_prime(run.arrays.slcp, ell);
}

nlohmann::json report_json(const std::string& algo, const Inputs& in,
                           const AlgoRun& run) {
  const std::size_t n = in.text.size();
  const std::size_t b = in.positions.size();
  const std::size_t ell = threshold_for(in.cfg, n, b);
  const DerivedSeeds seeds = derive_seeds(in.cfg.seed);
  const DerivedSeeds second = derive_seeds(second_pass_seed(in.cfg.seed));
  nlohmann::json j;
  j["algorithm"] = algo;
  j["n"] = n;
  j["b"] = b;
  j["ell"] = ell;
  j["b_prime"] = b_prime_of(run, ell);
  j["second_pass_ran"] = run.param ? run.param->second_pass_ran : false;
  j["seeds"] = {{"root", in.cfg.seed},
                {"positions", seeds.positions},
                {"fingerprint", seeds.fingerprint},
                {"table", seeds.table},
                {"second_pass_fingerprint", second.fingerprint},
                {"second_pass_table", second.table}};
  j["phases_ms"] = {{"preprocess", run.stats.phases.preprocess_ms},
                    {"refine", run.stats.phases.refine_ms},
                    {"sort", run.stats.phases.sort_ms},
                    {"emit", run.stats.phases.emit_ms},
                    {"merge", run.stats.phases.merge_ms}};
  j["total_ms"] = run.stats.total_ms;
  j["peak"] = {{"groups", run.stats.peak_groups},
               {"members", run.stats.peak_members},
               {"stack_high_water", run.stats.stack_high_water},
               {"hash_table_max", run.stats.max_table_size}};
  j["fingerprints"] = run.stats.fingerprints;
  return j;
}

int cmd_build(const InputFlags& f, const CLI::App* cmd, const std::string& out_path,
              const std::string& format, const std::string& report_path,
              std::ostream& out) {
  if (format != "csv" && format != "bin")
    throw UsageError("--format: unknown format '" + format + "' (csv|bin)");
  Inputs in = load_inputs(f, true, cmd);
  AlgoRun run = run_algorithm(f.algo, in.text, in.positions, in.cfg);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw LoadError("cannot open '" + out_path + "' for writing");
    sink = &file;
  }
  if (format == "csv")
    write_csv(*sink, run.arrays);
  else
    write_bin(*sink, run.arrays, in.text.size());
  sink->flush();
  if (!*sink) throw LoadError("write failure on output");

  if (!report_path.empty()) {
    std::ofstream rep(report_path);
    if (!rep) throw LoadError("cannot open '" + report_path + "' for writing");
    rep << report_json(f.algo, in, run).dump(2) << '\n';
  }
  return 0;
}

int cmd_verify(const InputFlags& f, const CLI::App* cmd, std::ostream& out,
               std::ostream& err) {
  Inputs in = load_inputs(f, true, cmd);
  AlgoRun run = run_algorithm(f.algo, in.text, in.positions, in.cfg);
  const SsaSlcp expected = naive_ssa_slcp(in.text, in.positions);
  for (std::size_t r = 0; r < expected.size(); ++r) {
    if (run.arrays.ssa[r] != expected.ssa[r]) {
      err << "mismatch: ssa[" << r + 1 << "] = " << run.arrays.ssa[r]
          << ", oracle " << expected.ssa[r] << '\n';
      return kExitMismatch;
    }
    if (run.arrays.slcp[r] != expected.slcp[r]) {
      err << "mismatch: slcp[" << r + 1 << "] = " << run.arrays.slcp[r]
          << ", oracle " << expected.slcp[r] << '\n';
      return kExitMismatch;
    }
  }
  out << "ok: " << f.algo << " matches oracle on b=" << expected.size()
      << " suffixes\n";
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

int cmd_bench(const std::string& text_path, double ratio, long long repeat,
              std::uint64_t seed, const std::string& algos, long long jstart,
              const std::string& out_path, std::ostream& out) {
  const auto names = split_list(algos);
  if (names.empty()) throw UsageError("--algo: empty algorithm list");
  for (const auto& a : names) check_algo(a);
  if (repeat < 1)
    throw UsageError("--repeat: value " + std::to_string(repeat) + " must be >= 1");
  if (!(ratio > 0.0) || ratio > 1.0)
    throw UsageError("--b-ratio: value " + std::to_string(ratio) + " outside (0, 1]");

  const Text text = load_text(text_path);
  const std::size_t n = text.size();
  const auto b = static_cast<std::size_t>(ratio * static_cast<double>(n));
  if (b < 1)
    throw UsageError("--b-ratio: value " + std::to_string(ratio) +
                     " yields b = 0 for n = " + std::to_string(n));

  InputFlags f;
  f.seed = seed;
  f.jstart = jstart;
  const PositionSet positions = sample_positions(n, b, derive_seeds(seed).positions);
  const RunConfig cfg = make_config(f, b, n);
  const std::size_t ell = threshold_for(cfg, n, b);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw LoadError("cannot open '" + out_path + "' for writing");
    sink = &file;
  }
  *sink << "algorithm,n,b,b_prime,ell,repeat,preprocess_ms,refine_ms,sort_ms,"
           "emit_ms,merge_ms,total_ms,peak_groups,peak_members,"
           "stack_high_water,hash_table_max\n";
  for (long long r = 1; r <= repeat; ++r) {
    for (const auto& algo : names) {
      const AlgoRun run = run_algorithm(algo, text, positions, cfg);
      const auto& p = run.stats.phases;
      *sink << algo << ',' << n << ',' << b << ',' << b_prime_of(run, ell) << ','
            << ell << ',' << r << ',' << p.preprocess_ms << ',' << p.refine_ms
            << ',' << p.sort_ms << ',' << p.emit_ms << ',' << p.merge_ms << ','
            << run.stats.total_ms << ',' << run.stats.peak_groups << ','
            << run.stats.peak_members << ',' << run.stats.stack_high_water << ','
            << run.stats.max_table_size << '\n';
    }
  }
  sink->flush();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sparse suffix array and sparse LCP array construction", "sparse-ssa"};
  app.require_subcommand(1);

  InputFlags build_flags;
  std::string build_out, build_format = "csv", build_report;
  auto* build = app.add_subcommand("build", "Construct SSA/SLCP and write them out");
  add_input_flags(build, build_flags);
  build->add_option("--out", build_out, "Output path (default stdout)");
  build->add_option("--format", build_format, "csv | bin");
  build->add_option("--report", build_report, "Write a JSON run report here");

  InputFlags verify_flags;
  std::string ignored_out, ignored_format;
  auto* verify = app.add_subcommand("verify", "Run an algorithm and compare with the oracle");
  add_input_flags(verify, verify_flags);
  verify->add_option("--out", ignored_out, "Ignored");
  verify->add_option("--format", ignored_format, "Ignored");

  std::string bench_text, bench_algos = "main,param", bench_out;
  double bench_ratio = 0.0001;
  long long bench_repeat = 1, bench_jstart = -1;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Time algorithms on uniformly sampled positions");
  bench->add_option("--text", bench_text, "Text file (raw bytes)")->required();
  bench->add_option("--b-ratio", bench_ratio, "b as a fraction of n");
  bench->add_option("--repeat", bench_repeat, "Repetitions per algorithm");
  bench->add_option("--seed", bench_seed, "Root seed");
  bench->add_option("--algo", bench_algos, "Comma-separated list of main,param,naive");
  bench->add_option("--jstart", bench_jstart, "Override the starting refinement round");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build)
      return cmd_build(build_flags, build, build_out, build_format, build_report, out);
    if (*verify) return cmd_verify(verify_flags, verify, out, err);
    return cmd_bench(bench_text, bench_ratio, bench_repeat, bench_seed, bench_algos,
                     bench_jstart, bench_out, out);
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sparse_ssa
