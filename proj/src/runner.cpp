#include "regen/runner.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "regen/csv.hpp"
#include "regen/stats.hpp"

namespace regen {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "problem",     "engine",   "replacement", "regen",
    "crossover_rates", "runs", "iterations",  "pop_size",
    "tournament_k", "mutation", "mark_rate",  "p_add",
    "p_remove",    "p_modify", "periods",     "seed",
    "out_dir"};

EngineKind parse_engine(const std::string& s) {
  if (s == "ga") return EngineKind::ga;
  if (s == "haea") return EngineKind::haea;
  throw ConfigError("unknown engine '" + s + "' (expected ga or haea)");
}

ReplacementKind parse_replacement(const std::string& s) {
  if (s == "generational") return ReplacementKind::generational;
  if (s == "steady_state") return ReplacementKind::steady_state;
  throw ConfigError("unknown replacement '" + s +
                    "' (expected generational or steady_state)");
}

MutationKind parse_mutation(const std::string& s) {
  if (s == "per_bit") return MutationKind::per_bit;
  if (s == "single_bit") return MutationKind::single_bit;
  throw ConfigError("unknown mutation '" + s +
                    "' (expected per_bit or single_bit)");
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("key '" + key + "': " + e.what());
  }
}

std::string rate_suffix(double rate) {
  // 0.6 -> "06", 1.0 -> "10"; anything off the tenth grid keeps its decimals.
  const double tenths = rate * 10.0;
  const double rounded = std::round(tenths);
  if (std::abs(tenths - rounded) < 1e-9) {
    const int value = static_cast<int>(rounded);
    std::string s = std::to_string(value);
    return value < 10 ? "0" + s : s;
  }
  return format_double(rate);
}

struct Cell {
  std::string label;
  EngineConfig config;
};

std::vector<Cell> build_cells(const ExperimentSpec& spec) {
  EngineConfig base;
  base.engine = spec.engine;
  base.replacement = spec.replacement;
  base.regen_enabled = spec.regen;
  base.pop_size = spec.pop_size;
  base.iterations = spec.iterations;
  base.mutation = spec.mutation;
  base.tournament_k = spec.tournament_k;
  base.marking = spec.marking;
  base.periods = spec.periods;

  std::vector<Cell> cells;
  if (spec.engine == EngineKind::haea) {
    Cell cell{cell_label(spec, 0.0), base};
    cell.config.seed = cell_seed(spec.seed, cell.label);
    cells.push_back(std::move(cell));
  } else {
    for (double rate : spec.crossover_rates) {
      Cell cell{cell_label(spec, rate), base};
      cell.config.crossover_rate = rate;
      cell.config.seed = cell_seed(spec.seed, cell.label);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string trace_csv(const RunTrace& trace) {
  std::string text = "iteration,best_fitness\n";
  for (std::size_t i = 0; i < trace.best_fitness_per_iteration.size(); ++i) {
    text += std::to_string(i + 1);
    text += ',';
    text += format_double(trace.best_fitness_per_iteration[i]);
    text += '\n';
  }
  return text;
}

std::string run_file_name(int run_index) {
  std::string n = std::to_string(run_index + 1);
  while (n.size() < 3) n.insert(n.begin(), '0');
  return "run_" + n + ".csv";
}

std::vector<SampleGroup> load_groups(
    const std::vector<std::filesystem::path>& inputs) {
  if (inputs.empty()) throw ConfigError("no input files given");
  std::vector<SampleGroup> groups;
  for (const auto& path : inputs) {
    CsvTable table;
    try {
      table = read_csv(path);
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      groups.push_back(SampleGroup{table.header[c], table.columns[c]});
    }
  }
  return groups;
}

std::vector<double> pool_by_prefix(const std::vector<SampleGroup>& groups,
                                   const std::string& prefix) {
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.label.rfind(prefix, 0) == 0) {
      pooled.insert(pooled.end(), g.values.begin(), g.values.end());
    }
  }
  if (pooled.empty()) {
    throw ConfigError("no columns match prefix '" + prefix + "'");
  }
  return pooled;
}

}  // namespace

ExperimentSpec parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError(path.string() + ": config must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (!kKnownKeys.contains(item.key())) {
      throw ConfigError(path.string() + ": unknown key '" + item.key() + "'");
    }
  }
  if (!j.contains("problem")) {
    throw ConfigError(path.string() + ": missing required key 'problem'");
  }

  ExperimentSpec spec;
  spec.problem = get_or<std::string>(j, "problem", "");
  try {
    problem_by_name(spec.problem);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  spec.engine = parse_engine(get_or<std::string>(j, "engine", "ga"));
  spec.replacement =
      parse_replacement(get_or<std::string>(j, "replacement", "generational"));
  spec.regen = get_or<bool>(j, "regen", false);
  spec.crossover_rates =
      get_or<std::vector<double>>(j, "crossover_rates", spec.crossover_rates);
  spec.runs = get_or<int>(j, "runs", spec.runs);
  spec.iterations = get_or<int>(j, "iterations", spec.iterations);
  spec.pop_size = get_or<int>(j, "pop_size", spec.pop_size);
  spec.tournament_k = get_or<int>(j, "tournament_k", spec.tournament_k);
  const std::string default_mutation =
      spec.engine == EngineKind::haea ? "single_bit" : "per_bit";
  spec.mutation =
      parse_mutation(get_or<std::string>(j, "mutation", default_mutation));
  spec.marking.mark_rate = get_or<double>(j, "mark_rate", spec.marking.mark_rate);
  spec.marking.p_add = get_or<double>(j, "p_add", spec.marking.p_add);
  spec.marking.p_remove = get_or<double>(j, "p_remove", spec.marking.p_remove);
  spec.marking.p_modify = get_or<double>(j, "p_modify", spec.marking.p_modify);
  if (j.contains("periods")) {
    spec.periods.clear();
    const json& periods = j.at("periods");
    if (!periods.is_array()) {
      throw ConfigError(path.string() +
                        ": 'periods' must be an array of [start, end] pairs");
    }
    for (const json& p : periods) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number()) {
        throw ConfigError(path.string() +
                          ": each period must be a [start, end] pair");
      }
      spec.periods.push_back({p[0].get<int>(), p[1].get<int>()});
    }
  }
  spec.seed = get_or<std::uint64_t>(j, "seed", spec.seed);
  spec.out_dir = get_or<std::string>(j, "out_dir", spec.out_dir.string());

  if (spec.runs < 1) throw ConfigError("runs must be positive");
  if (spec.engine == EngineKind::ga && spec.crossover_rates.empty()) {
    throw ConfigError("crossover_rates may not be empty for the GA engine");
  }
  for (double rate : spec.crossover_rates) {
    if (rate < 0.0 || rate > 1.0) {
      throw ConfigError("crossover rates must be in [0, 1]");
    }
  }
  EngineConfig probe = build_cells(spec).front().config;
  try {
    validate(probe);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return spec;
}

std::string cell_label(const ExperimentSpec& spec, double crossover_rate) {
  std::string label = spec.regen ? "ReGen" : "";
  label += spec.replacement == ReplacementKind::generational ? "G" : "SS";
  if (spec.engine == EngineKind::haea) {
    label += "HAEA";
  } else {
    label += "GAX" + rate_suffix(crossover_rate);
  }
  return label;
}

std::uint64_t cell_seed(std::uint64_t base_seed, const std::string& label) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a offset basis
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (int shift = 0; shift < 64; shift += 8) {
    mix(static_cast<std::uint8_t>(base_seed >> shift));
  }
  for (char c : label) mix(static_cast<std::uint8_t>(c));
  return h;
}

void run_grid(const ExperimentSpec& spec, int jobs) {
  const Problem problem = problem_by_name(spec.problem);
  const std::vector<Cell> cells = build_cells(spec);

  std::string summary = "label,median,std,iteration_of_best\n";
  for (const Cell& cell : cells) {
    const std::vector<RunTrace> traces =
        run_experiment(cell.config, problem, spec.runs, jobs);
    for (std::size_t r = 0; r < traces.size(); ++r) {
      write_file(spec.out_dir / cell.label / run_file_name(static_cast<int>(r)),
                 trace_csv(traces[r]));
    }
    std::vector<double> bests;
    std::vector<double> best_iterations;
    bests.reserve(traces.size());
    for (const RunTrace& t : traces) {
      bests.push_back(*t.final_best.fitness);
      best_iterations.push_back(static_cast<double>(t.best_iteration));
    }
    summary += cell.label;
    summary += ',';
    summary += format_double(median(bests));
    summary += ',';
    summary += format_double(bests.size() > 1 ? sample_std(bests) : 0.0);
    summary += ',';
    summary += format_double(median(best_iterations));
    summary += '\n';
  }
  write_file(spec.out_dir / "summary.csv", summary);
}

void stats_report(const std::vector<std::filesystem::path>& inputs,
                  StatsMode mode, const std::filesystem::path& out_path,
                  const std::vector<std::pair<std::string, std::string>>&
                      wilcoxon_pairs) {
  const std::vector<SampleGroup> groups = load_groups(inputs);
  std::string text;
  switch (mode) {
    case StatsMode::anova: {
      AnovaResult r;
      try {
        r = anova_one_way(groups);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
      }
      text = "source,ss,df,ms,f,p_value\n";
      text += "between," + format_double(r.ss_between) + ',' +
              std::to_string(r.df_between) + ',' + format_double(r.ms_between) +
              ',' + format_double(r.f_statistic) + ',' +
              format_double(r.p_value) + '\n';
      text += "within," + format_double(r.ss_within) + ',' +
              std::to_string(r.df_within) + ',' + format_double(r.ms_within) +
              ",,\n";
      text += "total," + format_double(r.ss_between + r.ss_within) + ',' +
              std::to_string(r.df_between + r.df_within) + ",,,\n";
      break;
    }
    case StatsMode::pairwise: {
      std::vector<std::vector<double>> matrix;
      try {
        matrix = pairwise_t_bh(groups);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
      }
      text = "group";
      for (const auto& g : groups) text += ',' + g.label;
      text += '\n';
      for (std::size_t i = 0; i < groups.size(); ++i) {
        text += groups[i].label;
        for (std::size_t j = 0; j < groups.size(); ++j) {
          text += ',';
          if (i != j) text += format_double(matrix[i][j]);
        }
        text += '\n';
      }
      break;
    }
    case StatsMode::wilcoxon: {
      std::vector<std::pair<std::string, std::string>> pairs = wilcoxon_pairs;
      if (pairs.empty()) {
        if (groups.size() != 2) {
          throw ConfigError(
              "wilcoxon needs --pair X:Y prefixes unless the input has "
              "exactly two columns");
        }
        pairs.emplace_back(groups[0].label, groups[1].label);
      }
      text = "x,y,n,v,p_value\n";
      for (const auto& [x_prefix, y_prefix] : pairs) {
        const std::vector<double> x = pool_by_prefix(groups, x_prefix);
        const std::vector<double> y = pool_by_prefix(groups, y_prefix);
        if (x.size() != y.size()) {
          throw ConfigError("pair '" + x_prefix + ":" + y_prefix +
                            "' pools different sample counts");
        }
        WilcoxonResult r;
        try {
          r = wilcoxon_signed_rank(x, y);
        } catch (const std::domain_error& e) {
          throw ConfigError("pair '" + x_prefix + ":" + y_prefix +
                            "': " + e.what());
        }
        text += x_prefix + ',' + y_prefix + ',' + std::to_string(r.n_nonzero) +
                ',' + format_double(r.v) + ',' + format_double(r.p_value) +
                '\n';
      }
      break;
    }
  }
  write_file(out_path, text);
}

}  // namespace regen
