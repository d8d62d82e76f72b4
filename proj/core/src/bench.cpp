#include "maoea/bench.hpp"

#include "maoea/indicators.hpp"
#include "maoea/moea.hpp"
#include "maoea/problems.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace maoea {

using nlohmann::json;

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::invalid_argument("configuration error in '" + key + "': " + message),
      key_(std::move(key)) {}

namespace {

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(key, e.what());
  }
}

template <typename T>
std::vector<T> list_of(const json& j, const std::string& key) {
  if (j.is_array()) {
    return get_as<std::vector<T>>(j, key);
  }
  return {get_as<T>(j, key)};
}

} // namespace

BenchConfig BenchConfig::parse(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("<file>", "top level must be an object");
  }
  BenchConfig c;
  for (const auto& [key, value] : root.items()) {
    if (key == "problems") {
      c.problems = list_of<std::string>(value, key);
    } else if (key == "objectives") {
      c.objectives = list_of<int>(value, key);
    } else if (key == "pop_size") {
      if (!value.is_null()) {
        c.pop_size = get_as<std::size_t>(value, key);
      }
    } else if (key == "max_evals") {
      c.max_evals = get_as<std::size_t>(value, key);
    } else if (key == "strategies") {
      c.strategies.clear();
      for (const auto& name : list_of<std::string>(value, key)) {
        try {
          c.strategies.push_back(parse_selection_strategy(name));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(key, e.what());
        }
      }
    } else if (key == "kernel") {
      try {
        c.kernel = parse_similarity_mode(get_as<std::string>(value, key));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
      }
    } else if (key == "eigen") {
      try {
        c.eigen_method = parse_eigen_method(get_as<std::string>(value, key));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw ConfigError(key, e.what());
      }
    } else if (key == "seeds") {
      if (value.is_number_integer()) {
        const auto count = get_as<std::uint64_t>(value, key);
        c.seeds.clear();
        for (std::uint64_t s = 1; s <= count; ++s) {
          c.seeds.push_back(s);
        }
      } else {
        c.seeds = get_as<std::vector<std::uint64_t>>(value, key);
      }
    } else if (key == "out_dir") {
      c.out_dir = get_as<std::string>(value, key);
    } else if (key == "threads") {
      c.threads = get_as<unsigned>(value, key);
    } else if (key == "trace_every") {
      c.trace_every = get_as<std::size_t>(value, key);
    } else if (key == "hv_samples") {
      c.hv_samples = get_as<std::size_t>(value, key);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  c.validate();
  return c;
}

BenchConfig BenchConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw ConfigError("<file>", "cannot open " + file.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void BenchConfig::validate() const {
  if (problems.empty()) {
    throw ConfigError("problems", "at least one problem is required");
  }
  if (objectives.empty()) {
    throw ConfigError("objectives", "at least one objective count is required");
  }
  for (const auto& p : problems) {
    try {
      (void)parse_problem(p);
    } catch (const UnknownProblem& e) {
      throw ConfigError("problems", e.what());
    }
  }
  for (const int m : objectives) {
    if (m < 2) {
      throw ConfigError("objectives", "objective count must be at least 2");
    }
    if (!pop_size) {
      try {
        (void)default_population_size(m);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("objectives", e.what());
      }
    }
  }
  if (pop_size && *pop_size < 2) {
    throw ConfigError("pop_size", "population size must be at least 2");
  }
  if (strategies.empty()) {
    throw ConfigError("strategies", "at least one strategy is required");
  }
  if (seeds.empty()) {
    throw ConfigError("seeds", "at least one seed is required");
  }
  if (threads == 0) {
    throw ConfigError("threads", "must be positive");
  }
}

std::string CellSpec::label() const {
  return problem + "/M=" + std::to_string(objectives) + "/" + std::string(to_string(strategy)) +
         "/seed=" + std::to_string(seed);
}

std::vector<CellSpec> expand_cells(const BenchConfig& config) {
  std::vector<CellSpec> cells;
  for (const auto& p : config.problems) {
    for (const int m : config.objectives) {
      for (const auto s : config.strategies) {
        for (const auto seed : config.seeds) {
          cells.push_back(CellSpec{p, m, s, seed});
        }
      }
    }
  }
  return cells;
}

namespace {

constexpr std::uint64_t kHvStream = 0x4856;

std::vector<ObjectiveVector> objectives_of(std::span<const Solution> members) {
  std::vector<ObjectiveVector> out;
  out.reserve(members.size());
  for (const auto& s : members) {
    out.push_back(s.f);
  }
  return out;
}

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

} // namespace

RunRecord run_cell(const BenchConfig& config, const CellSpec& cell) {
  const auto start = std::chrono::steady_clock::now();
  const ProblemSpec spec = make_problem(cell.problem, cell.objectives);
  const std::size_t n =
      config.pop_size ? *config.pop_size : default_population_size(cell.objectives);
  AlgoConfig algo = AlgoConfig::defaults(spec, n, cell.seed);
  algo.max_evaluations = config.max_evals;
  algo.strategy = cell.strategy;
  algo.similarity = config.kernel;
  algo.eigen_method = config.eigen_method;

  const ReferenceSet ref = ReferenceSet::of(spec);

  RunRecord rec;
  rec.problem = spec.name();
  rec.objectives = spec.objectives;
  rec.dimension = spec.dimension;
  rec.population_size = n;
  rec.strategy = std::string(to_string(cell.strategy));
  rec.kernel = std::string(to_string(config.kernel));
  rec.seed = cell.seed;

  const bool tracing = !config.out_dir.empty() && config.trace_every > 0;
  GenerationObserver observer;
  if (tracing) {
    observer = [&](GenerationTrace& tr, std::span<const Solution> pop) {
      if (tr.generation % config.trace_every == 0) {
        tr.igd = igd(pop, ref);
      }
    };
  }
  RunResult result = run(algo, observer);

  const std::vector<ObjectiveVector> front = objectives_of(result.population.members);
  rec.evaluations = result.evaluations;
  rec.igd = igd(std::span<const ObjectiveVector>(front), ref);
  RngStream hv_rng = RngStream(cell.seed).split(kHvStream);
  rec.hv = normalized_hv(front, ref, hv_rng, config.hv_samples);

  if (tracing) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(config.out_dir) / "traces";
    fs::create_directories(dir);
    const fs::path file = dir / (rec.problem + "_M" + std::to_string(rec.objectives) + "_" +
                                 rec.strategy + "_" + rec.kernel + "_s" +
                                 std::to_string(rec.seed) + ".csv");
    std::ofstream out(file);
    out << "generation,evaluations,igd\n";
    for (std::size_t g = 0; g < result.trace.size(); ++g) {
      const auto& tr = result.trace[g];
      const bool last = g + 1 == result.trace.size();
      if (!tr.igd && !last) {
        continue;
      }
      out << tr.generation << ',' << tr.evaluations << ','
          << fmt_sci(tr.igd ? *tr.igd : rec.igd) << '\n';
    }
    if (!out) {
      throw std::runtime_error("cannot write trace " + file.string());
    }
    rec.trace_path = file.string();
  }

  rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

MatrixResult run_matrix(const BenchConfig& config) {
  config.validate();
  const std::vector<CellSpec> cells = expand_cells(config);
  std::vector<std::optional<RunRecord>> slots(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        slots[i] = run_cell(config, cells[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned workers =
      std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(cells.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  MatrixResult out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (slots[i]) {
      out.records.push_back(std::move(*slots[i]));
    } else {
      out.failures.push_back(CellFailure{cells[i], errors[i]});
    }
  }
  return out;
}

std::string csv_header() {
  return "problem,M,D,N,strategy,kernel,seed,evals,igd,hv,wall_ms";
}

std::string csv_row(const RunRecord& r) {
  std::ostringstream s;
  s << r.problem << ',' << r.objectives << ',' << r.dimension << ',' << r.population_size << ','
    << r.strategy << ',' << r.kernel << ',' << r.seed << ',' << r.evaluations << ','
    << fmt_sci(r.igd) << ',' << fmt_sci(r.hv) << ',' << r.wall_ms;
  return s.str();
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) {
    out << csv_row(r) << '\n';
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("read_csv: empty input");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != csv_header()) {
    throw std::runtime_error("read_csv: unexpected header '" + line + "'");
  }
  std::vector<RunRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      f.push_back(cell);
    }
    if (f.size() != 11) {
      throw std::runtime_error("read_csv: line " + std::to_string(lineno) + " has " +
                               std::to_string(f.size()) + " fields");
    }
    try {
      RunRecord r;
      r.problem = f[0];
      r.objectives = std::stoi(f[1]);
      r.dimension = std::stoi(f[2]);
      r.population_size = std::stoull(f[3]);
      r.strategy = f[4];
      r.kernel = f[5];
      r.seed = std::stoull(f[6]);
      r.evaluations = std::stoull(f[7]);
      r.igd = std::stod(f[8]);
      r.hv = std::stod(f[9]);
      r.wall_ms = std::stoll(f[10]);
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::runtime_error("read_csv: malformed value on line " + std::to_string(lineno));
    }
  }
  return out;
}

std::string to_json(const std::vector<RunRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json j = {{"problem", r.problem},   {"M", r.objectives},    {"D", r.dimension},
              {"N", r.population_size}, {"strategy", r.strategy}, {"kernel", r.kernel},
              {"seed", r.seed},         {"evals", r.evaluations}, {"igd", r.igd},
              {"hv", r.hv},             {"wall_ms", r.wall_ms}};
    if (!r.trace_path.empty()) {
      j["trace"] = r.trace_path;
    }
    arr.push_back(std::move(j));
  }
  json root = {{"schema", std::string(kSchemaVersion)},
               {"hv_reference", "true-front ideal/nadir mapped to 0/1, ref 1.1 per axis, "
                                "divided by 1.1^M"},
               {"records", std::move(arr)}};
  return root.dump(2);
}

std::vector<ComparisonResult> summarize(const std::vector<RunRecord>& records,
                                        std::string_view baseline) {
  // (problem, M) -> strategy -> IGD samples, keeping first-seen order.
  using Key = std::pair<std::string, int>;
  std::vector<Key> order;
  std::map<Key, std::vector<std::pair<std::string, std::vector<double>>>> cells;
  for (const auto& r : records) {
    const Key key{r.problem, r.objectives};
    auto [it, fresh] = cells.try_emplace(key);
    if (fresh) {
      order.push_back(key);
    }
    auto& bucket = it->second;
    auto s = std::find_if(bucket.begin(), bucket.end(),
                          [&](const auto& e) { return e.first == r.strategy; });
    if (s == bucket.end()) {
      bucket.emplace_back(r.strategy, std::vector<double>{});
      s = std::prev(bucket.end());
    }
    s->second.push_back(r.igd);
  }

  std::vector<ComparisonResult> out;
  for (const auto& key : order) {
    const auto& bucket = cells.at(key);
    auto base = std::find_if(bucket.begin(), bucket.end(),
                             [&](const auto& e) { return e.first == baseline; });
    if (base == bucket.end()) {
      continue;
    }
    for (const auto& [strategy, samples] : bucket) {
      if (strategy == baseline) {
        continue;
      }
      ComparisonResult c;
      c.problem = key.first;
      c.objectives = key.second;
      c.baseline = std::string(baseline);
      c.candidate = strategy;
      c.baseline_stats = describe(base->second);
      c.candidate_stats = describe(samples);
      c.verdict = compare_samples(samples, base->second, &c.p_value);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string to_markdown(const std::vector<ComparisonResult>& results) {
  std::ostringstream s;
  s << "| problem | M | baseline | median (mean +- std) | candidate | median (mean +- std) | p | |\n"
    << "|---|---|---|---|---|---|---|---|\n";
  std::vector<std::string> candidates;
  std::map<std::string, std::array<int, 3>> totals;
  for (const auto& c : results) {
    s << "| " << c.problem << " | " << c.objectives << " | " << c.baseline << " | "
      << fmt_sci(c.baseline_stats.median) << " (" << fmt_sci(c.baseline_stats.mean) << " +- "
      << fmt_sci(c.baseline_stats.stddev) << ") | " << c.candidate << " | "
      << fmt_sci(c.candidate_stats.median) << " (" << fmt_sci(c.candidate_stats.mean) << " +- "
      << fmt_sci(c.candidate_stats.stddev) << ") | " << fmt_sci(c.p_value) << " | "
      << verdict_symbol(c.verdict) << " |\n";
    if (totals.find(c.candidate) == totals.end()) {
      candidates.push_back(c.candidate);
      totals[c.candidate] = {0, 0, 0};
    }
    ++totals[c.candidate][static_cast<std::size_t>(c.verdict)];
  }
  for (const auto& name : candidates) {
    const auto& t = totals[name];
    s << "| **total** | | | | " << name << " | +/-/~ = " << t[0] << "/" << t[1] << "/" << t[2]
      << " | | |\n";
  }
  return s.str();
}

} // namespace maoea
