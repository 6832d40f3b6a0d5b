#include "gjsp/gen/grid.hpp"

#include <sstream>

#include "gjsp/error.hpp"

namespace gjsp {
namespace {

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const auto& item : split_list(value)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("grid key '" + key + "': not an integer: " + item);
    }
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, Distribution>) {
      out += std::string(to_string(values[i]));
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

}  // namespace

BenchmarkGrid full_grid() {
  BenchmarkGrid g;
  g.jobs = {5, 10, 20, 25, 50, 100};
  g.machines = {5, 10, 20, 25, 50, 100};
  g.rddd = {0, 1, 2};
  g.speeds = {1, 3, 5};
  g.distributions = {Distribution::Uniform, Distribution::Normal, Distribution::Exponential};
  g.seeds_per_cell = 10;
  return g;
}

BenchmarkGrid desk_grid() {
  BenchmarkGrid g;
  g.jobs = {3, 5, 8};
  g.machines = {3, 5, 8};
  g.rddd = {0, 1, 2};
  g.speeds = {1, 3};
  g.distributions = {Distribution::Uniform, Distribution::Normal, Distribution::Exponential};
  g.seeds_per_cell = 10;
  return g;
}

std::uint64_t replicate_seed(std::uint64_t master_seed, int jobs, int machines, int rddd,
                             int speeds, Distribution dist, int replicate) {
  std::uint64_t h = mix_seed(master_seed, static_cast<std::uint64_t>(jobs));
  h = mix_seed(h, static_cast<std::uint64_t>(machines));
  h = mix_seed(h, static_cast<std::uint64_t>(rddd));
  h = mix_seed(h, static_cast<std::uint64_t>(speeds));
  h = mix_seed(h, static_cast<std::uint64_t>(dist));
  return mix_seed(h, static_cast<std::uint64_t>(replicate));
}

std::vector<GeneratorConfig> enumerate_grid(const BenchmarkGrid& grid) {
  if (grid.jobs.empty() || grid.machines.empty() || grid.rddd.empty() || grid.speeds.empty() ||
      grid.distributions.empty() || grid.seeds_per_cell < 1) {
    throw ParseError("benchmark grid has an empty axis");
  }
  std::vector<GeneratorConfig> out;
  out.reserve(grid.size());
  for (int j : grid.jobs)
    for (int m : grid.machines)
      for (int r : grid.rddd)
        for (int s : grid.speeds)
          for (Distribution d : grid.distributions)
            for (int k = 0; k < grid.seeds_per_cell; ++k) {
              GeneratorConfig c;
              c.n_jobs = j;
              c.n_machines = m;
              c.rddd_level = r;
              c.n_speeds = s;
              c.distribution = d;
              c.seed = replicate_seed(grid.master_seed, j, m, r, s, d, k);
              out.push_back(c);
            }
  return out;
}

BenchmarkGrid parse_grid(const std::string& text) {
  BenchmarkGrid g;
  bool have[6] = {};
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("grid line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "jobs") {
      g.jobs = parse_ints(key, value);
      have[0] = true;
    } else if (key == "machines") {
      g.machines = parse_ints(key, value);
      have[1] = true;
    } else if (key == "rddd") {
      g.rddd = parse_ints(key, value);
      for (int r : g.rddd) window_level_from_int(r);
      have[2] = true;
    } else if (key == "speeds") {
      g.speeds = parse_ints(key, value);
      have[3] = true;
    } else if (key == "dist") {
      g.distributions.clear();
      for (const auto& name : split_list(value)) g.distributions.push_back(parse_distribution(name));
      have[4] = true;
    } else if (key == "seeds") {
      auto v = parse_ints(key, value);
      if (v.size() != 1 || v[0] < 1) throw ParseError("grid key 'seeds' must be one integer >= 1");
      g.seeds_per_cell = v[0];
      have[5] = true;
    } else if (key == "master_seed") {
      try {
        g.master_seed = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError("grid key 'master_seed': not an unsigned integer");
      }
    } else {
      throw ParseError("unknown grid key '" + key + "'");
    }
  }
  static const char* names[6] = {"jobs", "machines", "rddd", "speeds", "dist", "seeds"};
  for (int i = 0; i < 6; ++i) {
    if (!have[i]) throw ParseError(std::string("grid is missing key '") + names[i] + "'");
  }
  for (const auto* axis : {&g.jobs, &g.machines, &g.speeds}) {
    for (int v : *axis) {
      if (v < 1) throw ParseError("grid sizes must be positive");
    }
  }
  if (g.size() == 0) throw ParseError("benchmark grid has an empty axis");
  return g;
}

std::string grid_to_text(const BenchmarkGrid& g) {
  return "jobs=" + join(g.jobs) + "\nmachines=" + join(g.machines) + "\nrddd=" + join(g.rddd) +
         "\nspeeds=" + join(g.speeds) + "\ndist=" + join(g.distributions) +
         "\nseeds=" + std::to_string(g.seeds_per_cell) +
         "\nmaster_seed=" + std::to_string(g.master_seed) + "\n";
}

}  // namespace gjsp
