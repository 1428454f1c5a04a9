// Copyright 2026 The gapkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gapkit/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gapkit/error.hpp"
#include "gapkit/gap.hpp"
#include "gapkit/parallel.hpp"

namespace gapkit {
namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    std::size_t comma = text.find(',');
    std::string_view part = trim(text.substr(0, comma));
    if (!part.empty()) out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  text = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw_input("invalid integer for " + what + ": `" + std::string(text) + "`");
  }
  return value;
}

double parse_double(std::string_view text, const std::string& what) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw_input("invalid number for " + what + ": `" + std::string(text) + "`");
  }
  return value;
}

bool parse_bool(std::string_view text, const std::string& what) {
  text = trim(text);
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  throw_input("invalid boolean for " + what + ": `" + std::string(text) + "`");
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

struct ModelKeys {
  std::string_view model;
  std::vector<std::string_view> required;
  std::vector<std::string_view> optional;
};

const std::vector<ModelKeys>& model_table() {
  static const std::vector<ModelKeys> table = {
      {"er", {"n"}, {"p", "opinions"}},
      {"ba", {"n"}, {"m", "opinions"}},
      {"sbm", {"n"}, {"p", "q", "opinions"}},
      {"cliques", {}, {"m"}},
      {"gpp", {"values", "k"}, {}},
      {"file", {"edges"}, {"opinion_file"}},
  };
  return table;
}

constexpr std::string_view kCommonDatasetKeys[] = {"model", "seed", "remove",
                                                   "remove_seed", "bfs_root",
                                                   "bfs_limit"};

void validate_dataset(const DatasetSpec& spec) {
  auto model_it = spec.params.find("model");
  if (model_it == spec.params.end()) {
    throw_input("dataset `" + spec.name + "` has no model");
  }
  const auto& table = model_table();
  auto entry = std::find_if(table.begin(), table.end(), [&](const ModelKeys& m) {
    return m.model == model_it->second;
  });
  if (entry == table.end()) {
    throw_input("dataset `" + spec.name + "`: unknown model `" + model_it->second + "`");
  }
  for (std::string_view key : entry->required) {
    if (!spec.params.count(std::string(key))) {
      throw_input("dataset `" + spec.name + "`: missing key `" + std::string(key) + "`");
    }
  }
  for (const auto& [key, value] : spec.params) {
    auto known = [&](const auto& keys) {
      return std::find(std::begin(keys), std::end(keys), key) != std::end(keys);
    };
    if (!known(kCommonDatasetKeys) && !known(entry->required) && !known(entry->optional)) {
      throw_input("dataset `" + spec.name + "`: unknown key `" + key + "`");
    }
  }
}

std::string param(const DatasetSpec& spec, const std::string& key,
                  const std::string& fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

std::uint64_t opinion_seed(std::uint64_t seed) {
  return seed * 0x9E3779B97F4A7C15ULL + 0x6F70696E696F6E73ULL;
}

OpinionVector model_opinions(const DatasetSpec& spec, std::size_t n,
                             std::uint64_t seed, const std::string& fallback) {
  const std::string kind = param(spec, "opinions", fallback);
  if (kind == "uniform") return uniform_opinions(n, -1.0, 1.0, opinion_seed(seed));
  if (kind == "gaussian") return gaussian_opinions(n, opinion_seed(seed));
  if (kind == "block") {
    if (n % 2 != 0) throw_input("block opinions need an even node count");
    return block_opinions(n / 2);
  }
  if (kind == "zero") return OpinionVector(std::vector<double>(n, 0.0));
  throw_input("dataset `" + spec.name + "`: unknown opinion model `" + kind + "`");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_input("cannot open `" + path.string() + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

using CellKey = std::tuple<std::string, std::size_t, std::uint64_t>;  // algorithm, k, seed

struct CsvRow {
  std::string dataset;
  std::string algorithm;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double gap = 0.0;
};

constexpr std::string_view kDatasetHeader = "dataset,algorithm,k,seed,gap";

std::vector<CsvRow> read_rows(const fs::path& path) {
  std::vector<CsvRow> rows;
  if (!fs::exists(path)) return rows;
  std::istringstream in(read_file(path));
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      if (line != kDatasetHeader) throw_input("unexpected header in `" + path.string() + "`");
      header = false;
      continue;
    }
    if (line.empty()) continue;
    auto parts = split_list(line);
    if (parts.size() != 5) throw_input("malformed row in `" + path.string() + "`");
    rows.push_back({parts[0], parts[1], parse_u64(parts[2], "k"),
                    parse_u64(parts[3], "seed"), parse_double(parts[4], "gap")});
  }
  return rows;
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw_internal("number formatting failed");
  return std::string(buf, ptr);
}

std::vector<std::uint64_t> parse_integer_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : split_list(text)) {
    std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_u64(part, "list entry"));
      continue;
    }
    std::string_view rest = std::string_view(part).substr(dots + 2);
    std::uint64_t step = 1;
    if (std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
      step = parse_u64(rest.substr(colon + 1), "range step");
      rest = rest.substr(0, colon);
    }
    const std::uint64_t lo = parse_u64(std::string_view(part).substr(0, dots), "range start");
    const std::uint64_t hi = parse_u64(rest, "range end");
    if (step == 0 || lo > hi) throw_input("invalid range `" + part + "`");
    for (std::uint64_t v = lo; v <= hi; v += step) out.push_back(v);
  }
  if (out.empty()) throw_input("empty integer list");
  return out;
}

bool is_known_algorithm(std::string_view name) {
  return std::find(std::begin(kAlgorithms), std::end(kAlgorithms), name) !=
         std::end(kAlgorithms);
}

ExperimentConfig parse_experiment_config(std::string_view text,
                                         const fs::path& base_dir) {
  ExperimentConfig config;
  config.out_dir = base_dir / "results";
  enum class Section { kTop, kDataset, kRun } section = Section::kTop;
  std::size_t line_no = 0;
  std::set<std::string> run_keys_seen;

  auto finish_run = [&] {
    if (section != Section::kRun) return;
    const RunSpec& run = config.runs.back();
    if (run.datasets.empty() || run.algorithms.empty() || run.ks.empty() ||
        run.seeds.empty()) {
      throw_input("[run] block needs datasets, algorithms, k and seeds");
    }
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw_input(where + "unterminated section header");
      finish_run();
      std::string_view header = trim(line.substr(1, line.size() - 2));
      if (header == "run") {
        section = Section::kRun;
        config.runs.emplace_back();
        continue;
      }
      if (header.substr(0, 8) == "dataset ") {
        std::string name(trim(header.substr(8)));
        if (!valid_name(name)) throw_input(where + "invalid dataset name `" + name + "`");
        for (const auto& d : config.datasets) {
          if (d.name == name) throw_input(where + "dataset `" + name + "` defined twice");
        }
        section = Section::kDataset;
        config.datasets.push_back({name, {}, base_dir});
        continue;
      }
      throw_input(where + "unknown section `" + std::string(header) + "`");
    }

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw_input(where + "expected `key = value`");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));

    switch (section) {
      case Section::kTop:
        if (key == "out_dir") {
          fs::path p(value);
          config.out_dir = p.is_absolute() ? p : base_dir / p;
        } else {
          throw_input(where + "unknown top-level key `" + key + "`");
        }
        break;
      case Section::kDataset:
        if (!config.datasets.back().params.emplace(key, value).second) {
          throw_input(where + "duplicate key `" + key + "`");
        }
        break;
      case Section::kRun: {
        RunSpec& run = config.runs.back();
        if (key == "datasets") {
          run.datasets = split_list(value);
        } else if (key == "algorithms") {
          run.algorithms = split_list(value);
        } else if (key == "k") {
          for (auto v : parse_integer_list(value)) run.ks.push_back(static_cast<std::size_t>(v));
        } else if (key == "seeds") {
          run.seeds = parse_integer_list(value);
        } else if (key == "b") {
          run.batch = static_cast<std::size_t>(parse_u64(value, "b"));
          if (run.batch == 0) throw_input(where + "b must be at least 1");
        } else if (key == "prune") {
          run.exact.use_prune = parse_bool(value, "prune");
        } else if (key == "incident_cap") {
          run.exact.incident_cap = static_cast<std::size_t>(parse_u64(value, "incident_cap"));
        } else if (key == "evaluation_cap") {
          run.exact.evaluation_cap = parse_u64(value, "evaluation_cap");
        } else {
          throw_input(where + "unknown run key `" + key + "`");
        }
        break;
      }
    }
  }
  finish_run();

  for (const DatasetSpec& d : config.datasets) validate_dataset(d);
  for (const RunSpec& run : config.runs) {
    for (const std::string& name : run.datasets) {
      bool found = std::any_of(config.datasets.begin(), config.datasets.end(),
                               [&](const DatasetSpec& d) { return d.name == name; });
      if (!found) throw_input("run references unknown dataset `" + name + "`");
    }
    for (const std::string& algo : run.algorithms) {
      if (!is_known_algorithm(algo)) throw_input("unknown algorithm `" + algo + "`");
    }
  }
  if (config.runs.empty()) throw_input("config declares no [run] block");
  return config;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  return parse_experiment_config(read_file(path), path.parent_path());
}

GraphWithOpinions build_dataset(const DatasetSpec& spec) {
  validate_dataset(spec);
  const std::string model = spec.params.at("model");
  const std::uint64_t seed = parse_u64(param(spec, "seed", "1"), "seed");
  auto size_param = [&](const std::string& key, const std::string& fallback) {
    return static_cast<std::size_t>(parse_u64(param(spec, key, fallback), key));
  };

  GraphWithOpinions data;
  if (model == "er") {
    const std::size_t n = size_param("n", "");
    data.graph = erdos_renyi(n, parse_double(param(spec, "p", "0.05"), "p"), seed);
    data.opinions = model_opinions(spec, n, seed, "uniform");
  } else if (model == "ba") {
    const std::size_t n = size_param("n", "");
    data.graph = barabasi_albert(n, size_param("m", "4"), seed);
    data.opinions = model_opinions(spec, n, seed, "uniform");
  } else if (model == "sbm") {
    const std::size_t n = size_param("n", "");
    data = sbm_sample(n, parse_double(param(spec, "p", "0.05"), "p"),
                      parse_double(param(spec, "q", "0.03"), "q"), seed);
    if (spec.params.count("opinions")) {
      data.opinions = model_opinions(spec, 2 * n, seed, "block");
    }
  } else if (model == "cliques") {
    data = clique_fixture(size_param("m", "100"));
  } else if (model == "gpp") {
    std::vector<long long> values;
    for (const std::string& v : split_list(spec.params.at("values"))) {
      long long x = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw_input("dataset `" + spec.name + "`: invalid GPP value `" + v + "`");
      }
      values.push_back(x);
    }
    GppInstance inst = gpp_instance(std::move(values), size_param("k", ""));
    data.graph = std::move(inst.graph);
    data.opinions = std::move(inst.opinions);
  } else {
    auto resolve = [&](const std::string& p) {
      fs::path path(p);
      return path.is_absolute() ? path : spec.base_dir / path;
    };
    data.graph = parse_edge_list(read_file(resolve(spec.params.at("edges")))).graph;
    if (spec.params.count("opinion_file")) {
      data.opinions =
          parse_opinions(read_file(resolve(spec.params.at("opinion_file"))), data.graph)
              .opinions;
    } else {
      data.opinions = OpinionVector(std::vector<double>(data.graph.node_count(), 0.0));
    }
  }

  if (spec.params.count("bfs_limit")) {
    const auto root = static_cast<NodeId>(size_param("bfs_root", "0"));
    Subgraph sub = bfs_subgraph(data.graph, root, size_param("bfs_limit", ""));
    std::vector<double> s;
    for (NodeId old : sub.new_to_old) s.push_back(data.opinions[old]);
    data.graph = std::move(sub.graph);
    data.opinions = OpinionVector(std::move(s));
  }
  if (const std::size_t remove = size_param("remove", "0"); remove > 0) {
    const std::uint64_t remove_seed =
        parse_u64(param(spec, "remove_seed", std::to_string(seed)), "remove_seed");
    data.graph = remove_random_edges(data.graph, remove, remove_seed).graph;
  }
  return data;
}

ExperimentRecord run_algorithm(const std::string& dataset, const Graph& g,
                               const OpinionVector& s,
                               const std::string& algorithm, std::size_t k,
                               std::uint64_t seed, std::size_t batch,
                               const ExactOptions& exact) {
  const auto start = std::chrono::steady_clock::now();
  SolutionSet sol;
  if (algorithm == "random") {
    sol = random_k(g, s, k, seed);
  } else if (algorithm == "greedy") {
    sol = greedy(g, s, k);
  } else if (algorithm == "batch") {
    sol = greedy(g, s, k, {.batch = batch});
  } else if (algorithm == "randbatch") {
    sol = random_batch_greedy(g, s, k, batch, seed);
  } else if (algorithm == "exact") {
    sol = exact_min(g, s, k, exact);
  } else {
    throw_input("unknown algorithm `" + algorithm + "`");
  }
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRecord rec;
  rec.dataset = dataset;
  rec.algorithm = algorithm;
  rec.k = k;
  rec.seed = seed;
  rec.gap_before = sol.gap_trajectory.front();
  rec.gap_after = sol.final_gap;
  rec.trajectory = std::move(sol.gap_trajectory);
  rec.added = std::move(sol.added);
  rec.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  fs::create_directories(config.out_dir);
  ExperimentReport report;

  // Cells per dataset in declaration order; the first run block that names a
  // cell fixes its batch size and exact options.
  struct Cell {
    std::string algorithm;
    std::size_t k;
    std::uint64_t seed;
    const RunSpec* run;
  };
  std::map<std::string, std::vector<Cell>> cells;
  std::vector<std::string> order;
  std::map<std::string, std::set<CellKey>> planned;
  for (const RunSpec& run : config.runs) {
    for (const std::string& d : run.datasets) {
      if (!cells.count(d)) order.push_back(d);
      auto& list = cells[d];
      for (const std::string& a : run.algorithms) {
        for (std::size_t k : run.ks) {
          for (std::uint64_t seed : run.seeds) {
            if (planned[d].insert({a, k, seed}).second) list.push_back({a, k, seed, &run});
          }
        }
      }
    }
  }

  for (const std::string& name : order) {
    const DatasetSpec& spec = *std::find_if(
        config.datasets.begin(), config.datasets.end(),
        [&](const DatasetSpec& d) { return d.name == name; });
    const fs::path csv = config.out_dir / (name + ".csv");
    report.dataset_csvs.push_back(csv);

    std::set<CellKey> done;
    for (const CsvRow& row : read_rows(csv)) done.insert({row.algorithm, row.k, row.seed});
    std::vector<const Cell*> todo;
    for (const Cell& c : cells[name]) {
      if (done.count({c.algorithm, c.k, c.seed})) {
        ++report.cells_skipped;
      } else {
        todo.push_back(&c);
      }
    }
    if (!fs::exists(csv)) {
      std::ofstream out(csv, std::ios::binary);
      out << kDatasetHeader << '\n';
    }
    if (todo.empty()) continue;

    const GraphWithOpinions data = build_dataset(spec);
    const std::size_t chunk = std::max<std::size_t>(1, 4 * worker_count());
    for (std::size_t begin = 0; begin < todo.size(); begin += chunk) {
      const std::size_t end = std::min(todo.size(), begin + chunk);
      std::vector<double> gaps(end - begin);
      parallel_for(end - begin, [&](std::size_t i) {
        const Cell& c = *todo[begin + i];
        gaps[i] = run_algorithm(name, data.graph, data.opinions, c.algorithm, c.k,
                                c.seed, c.run->batch, c.run->exact)
                      .gap_after;
      });
      // Single writer, cell order.
      std::ofstream out(csv, std::ios::binary | std::ios::app);
      for (std::size_t i = begin; i < end; ++i) {
        const Cell& c = *todo[i];
        out << name << ',' << c.algorithm << ',' << c.k << ',' << c.seed << ','
            << format_real(gaps[i - begin]) << '\n';
      }
      report.cells_run += end - begin;
    }
  }

  // Summary: mean gap over seeds per (dataset, algorithm, k).
  struct Acc {
    double sum = 0.0;
    std::size_t runs = 0;
  };
  std::map<std::tuple<std::string, std::string, std::size_t>, Acc> groups;
  for (const fs::path& csv : report.dataset_csvs) {
    for (const CsvRow& row : read_rows(csv)) {
      Acc& acc = groups[{row.dataset, row.algorithm, row.k}];
      acc.sum += row.gap;
      ++acc.runs;
    }
  }
  report.summary_csv = config.out_dir / "summary.csv";
  std::ofstream summary(report.summary_csv, std::ios::binary | std::ios::trunc);
  summary << "dataset,algorithm,k,runs,mean_gap\n";
  for (const auto& [key, acc] : groups) {
    const auto& [dataset, algorithm, k] = key;
    summary << dataset << ',' << algorithm << ',' << k << ',' << acc.runs << ','
            << format_real(acc.sum / static_cast<double>(acc.runs)) << '\n';
  }
  return report;
}

}  // namespace gapkit
