#include "maoea/bench.hpp"
#include "maoea/problems.hpp"
#include "maoea/rng.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunArgs {
  std::string config;
  std::string problem;
  int objectives = 0;
  std::string strategy = "dpp";
  std::string kernel = "expdist";
  std::uint64_t seed = 1;
  std::size_t evals = 100000;
  std::size_t pop_size = 0;
  unsigned threads = 0;
  std::string out;
};

int write_records(const maoea::MatrixResult& result, const std::string& csv_path,
                  const std::string& out_dir) {
  std::ofstream csv(csv_path);
  if (!csv) {
    std::cerr << "error: cannot write " << csv_path << "\n";
    return 2;
  }
  maoea::write_csv(csv, result.records);
  if (!out_dir.empty()) {
    std::ofstream js(fs::path(out_dir) / "results.json");
    js << maoea::to_json(result.records) << "\n";
  }
  std::cout << "wrote " << result.records.size() << " rows to " << csv_path << "\n";
  if (!result.failures.empty()) {
    std::cerr << result.failures.size() << " cell(s) failed:\n";
    for (const auto& f : result.failures) {
      std::cerr << "  " << f.cell.label() << ": " << f.message << "\n";
    }
    return 1;
  }
  return 0;
}

int cmd_run(const RunArgs& a) {
  maoea::BenchConfig config;
  if (!a.config.empty()) {
    config = maoea::BenchConfig::load(a.config);
  } else {
    if (a.problem.empty() || a.objectives == 0) {
      std::cerr << "error: run needs --config or both --problem and --objectives\n";
      return 2;
    }
    config.problems = {a.problem};
    config.objectives = {a.objectives};
    config.strategies = {maoea::parse_selection_strategy(a.strategy)};
    config.kernel = maoea::parse_similarity_mode(a.kernel);
    config.seeds = {a.seed};
    config.max_evals = a.evals;
    config.trace_every = 0;
    if (a.pop_size > 0) {
      config.pop_size = a.pop_size;
    }
  }
  if (a.threads > 0) {
    config.threads = a.threads;
  }
  config.validate();

  std::string csv_path = a.out;
  if (csv_path.empty()) {
    if (config.out_dir.empty()) {
      csv_path = "results.csv";
    } else {
      csv_path = (fs::path(config.out_dir) / "results.csv").string();
    }
  }
  if (!config.out_dir.empty()) {
    fs::create_directories(config.out_dir);
  }
  const maoea::MatrixResult result = maoea::run_matrix(config);
  return write_records(result, csv_path, config.out_dir);
}

int cmd_compare(const std::string& in_path, const std::string& baseline) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "error: cannot read " << in_path << "\n";
    return 2;
  }
  const auto records = maoea::read_csv(in);
  const auto table = maoea::summarize(records, baseline);
  if (table.empty()) {
    std::cerr << "error: no (problem, M) cell has both '" << baseline
              << "' and another strategy with enough seeds\n";
    return 1;
  }
  std::cout << maoea::to_markdown(table);
  return 0;
}

int cmd_pf_sample(const std::string& problem, int objectives, std::size_t n, std::uint64_t seed,
                  const std::string& out_path) {
  const maoea::ProblemSpec spec = maoea::make_problem(problem, objectives);
  maoea::RngStream rng(seed);
  const auto points = maoea::true_pf_sample(spec, n, rng);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  for (int i = 0; i < objectives; ++i) {
    out << (i ? "," : "") << "f" << (i + 1);
  }
  out << "\n";
  char buf[32];
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.5e", p[i]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
  std::cout << "wrote " << points.size() << " points to " << out_path << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-objective optimization with DPP-based environmental selection"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", "maoea CSV schema " + std::string(maoea::kSchemaVersion));

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a benchmark matrix or a single cell");
  run->add_option("--config", run_args.config, "JSON matrix configuration")
      ->check(CLI::ExistingFile);
  run->add_option("--problem", run_args.problem, "Problem name, e.g. dtlz2");
  run->add_option("--objectives", run_args.objectives, "Objective count M");
  run->add_option("--strategy", run_args.strategy, "dpp | kdpp | uniform")
      ->capture_default_str();
  run->add_option("--kernel", run_args.kernel, "expdist | cos | expneg")->capture_default_str();
  run->add_option("--seed", run_args.seed, "Random seed")->capture_default_str();
  run->add_option("--evals", run_args.evals, "Evaluation budget")->capture_default_str();
  run->add_option("--pop-size", run_args.pop_size, "Population size (default by M)");
  run->add_option("--threads", run_args.threads, "Worker threads (overrides the config)");
  run->add_option("--out", run_args.out, "Output CSV path");

  std::string compare_in;
  std::string baseline = "dpp";
  auto* compare = app.add_subcommand("compare", "Rank-sum comparison of strategies from a CSV");
  compare->add_option("--in", compare_in, "Results CSV")->required()->check(CLI::ExistingFile);
  compare->add_option("--baseline", baseline, "Baseline strategy")->capture_default_str();

  std::string pf_problem;
  int pf_objectives = 3;
  std::size_t pf_n = 5000;
  std::uint64_t pf_seed = 1;
  std::string pf_out = "pf.csv";
  auto* pf = app.add_subcommand("pf-sample", "Sample points on a true Pareto front");
  pf->add_option("--problem", pf_problem, "Problem name")->required();
  pf->add_option("--objectives", pf_objectives, "Objective count M")->capture_default_str();
  pf->add_option("--n", pf_n, "Number of points")->capture_default_str();
  pf->add_option("--seed", pf_seed, "Random seed")->capture_default_str();
  pf->add_option("--out", pf_out, "Output CSV path")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      return cmd_run(run_args);
    }
    if (*compare) {
      return cmd_compare(compare_in, baseline);
    }
    if (*pf) {
      return cmd_pf_sample(pf_problem, pf_objectives, pf_n, pf_seed, pf_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << app.help();
  return 0;
}
