#include "gjsp/harness/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "gjsp/error.hpp"
#include "gjsp/gen/rng.hpp"
#include "gjsp/instance_io.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {
namespace {

using json = nlohmann::json;
using PairKey = std::pair<std::string, SolverId>;

struct JournalEntry {
  std::int64_t budget_ms = 0;
  ClockMode clock = ClockMode::Wall;
  SolverCell cell;
};

json journal_record(const std::string& id, SolverId solver, ClockMode clock,
                    const SolverCell& c) {
  json j;
  j["id"] = id;
  j["solver"] = std::string(solver_tag(solver));
  j["clock"] = std::string(to_string(clock));
  j["status"] = std::string(to_string(c.status));
  j["objective"] = c.objective ? json(*c.objective) : json(nullptr);
  if (c.components) {
    j["components"] = {c.components->makespan, c.components->energy, c.components->tardiness};
  } else {
    j["components"] = nullptr;
  }
  j["ms"] = c.solve_time_ms;
  j["budget_ms"] = c.budget_ms;
  j["note"] = c.note;
  return j;
}

// Later records win; unreadable lines (a torn final write) are skipped.
std::map<PairKey, JournalEntry> read_journal(const std::filesystem::path& path) {
  std::map<PairKey, JournalEntry> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      JournalEntry e;
      e.budget_ms = j.at("budget_ms").get<std::int64_t>();
      e.clock = parse_clock_mode(j.at("clock").get<std::string>());
      e.cell.status = parse_status(j.at("status").get<std::string>());
      if (!j.at("objective").is_null()) e.cell.objective = j["objective"].get<double>();
      if (!j.at("components").is_null()) {
        const auto& c = j["components"];
        e.cell.components = ObjectiveComponents{c.at(0).get<Time>(), c.at(1).get<Energy>(),
                                                c.at(2).get<Time>()};
      }
      e.cell.solve_time_ms = j.at("ms").get<std::int64_t>();
      e.cell.budget_ms = e.budget_ms;
      e.cell.note = j.at("note").get<std::string>();
      out[{j.at("id").get<std::string>(), parse_solver_tag(j.at("solver").get<std::string>())}] =
          std::move(e);
    } catch (const std::exception&) {
      continue;
    }
  }
  return out;
}

}  // namespace

std::int64_t pair_budget(const Instance& instance, const MatrixOptions& options) {
  if (options.budget_override) return *options.budget_override;
  std::int64_t b = allocate_budget(instance, options.policy);
  if (options.budget_cap) b = std::min(b, *options.budget_cap);
  return b;
}

std::uint64_t pair_seed(const Instance& instance, SolverId solver, std::uint64_t master) {
  return mix_seed(mix_seed(master, instance.seed), static_cast<std::uint64_t>(solver) + 1);
}

std::vector<Instance> load_instances(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InvalidInstance("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Instance> out;
  out.reserve(files.size());
  for (const auto& f : files) {
    Instance inst = read_instance(f);
    require_valid(inst);
    out.push_back(std::move(inst));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Instance& a, const Instance& b) { return a.id < b.id; });
  return out;
}

std::vector<ResultRow> run_matrix(const std::vector<Instance>& given,
                                  const MatrixOptions& options) {
  std::vector<const Instance*> instances;
  for (const Instance& i : given) instances.push_back(&i);
  std::stable_sort(instances.begin(), instances.end(),
                   [](const Instance* a, const Instance* b) { return a->id < b->id; });

  std::vector<ResultRow> rows(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = *instances[i];
    rows[i].id = inst.id;
    rows[i].n_jobs = inst.n_jobs;
    rows[i].n_machines = inst.n_machines;
    rows[i].rddd_level = static_cast<int>(inst.rddd_level);
    rows[i].n_speeds = inst.n_speeds;
    for (SolverCell& c : rows[i].cells) c.note = "not run";
  }

  std::map<PairKey, JournalEntry> journal;
  if (!options.journal.empty() && std::filesystem::exists(options.journal)) {
    journal = read_journal(options.journal);
  }

  std::vector<std::pair<std::size_t, SolverId>> pending;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (SolverId s : options.solvers) {
      const std::int64_t budget = pair_budget(*instances[i], options);
      const auto it = journal.find({instances[i]->id, s});
      if (it != journal.end() && it->second.budget_ms == budget &&
          it->second.clock == options.clock) {
        rows[i].cell(s) = it->second.cell;
      } else {
        pending.emplace_back(i, s);
      }
    }
  }

  std::ofstream journal_out;
  if (!options.journal.empty()) {
    if (options.journal.has_parent_path()) {
      std::filesystem::create_directories(options.journal.parent_path());
    }
    journal_out.open(options.journal, std::ios::app);
  }
  std::mutex journal_mutex;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pending.size()) return;
      const auto [i, solver] = pending[k];
      const Instance& inst = *instances[i];
      SolverCell cell;
      bool journaled = true;
      SolveOptions so;
      so.budget_ms = pair_budget(inst, options);
      so.seed = pair_seed(inst, solver, options.seed);
      so.clock = options.clock;
      try {
        cell = cell_from_outcome(solve(solver, inst, so));
      } catch (const std::exception& e) {
        cell = SolverCell{};
        cell.budget_ms = so.budget_ms;
        cell.note = std::string("error: ") + e.what();
        journaled = false;
      }
      rows[i].cell(solver) = cell;
      if (journaled && journal_out.is_open()) {
        const std::string line = journal_record(inst.id, solver, options.clock, cell).dump();
        std::lock_guard lock(journal_mutex);
        journal_out << line << '\n';
        journal_out.flush();
      }
    }
  };

  const int threads =
      std::clamp<int>(options.parallelism, 1, static_cast<int>(std::max<std::size_t>(1, pending.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace gjsp
