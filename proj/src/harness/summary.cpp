#include "gjsp/harness/summary.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "gjsp/harness/csv.hpp"

namespace gjsp {

std::array<StatusCounts, 3> summarize_status(const std::vector<ResultRow>& results) {
  std::array<StatusCounts, 3> counts{};
  for (const ResultRow& r : results) {
    for (int s = 0; s < 3; ++s) {
      switch (r.cells[s].status) {
        case SolveStatus::Optimal: ++counts[s].optimal; break;
        case SolveStatus::Satisfied: ++counts[s].satisfied; break;
        case SolveStatus::Unresolved: ++counts[s].unresolved; break;
      }
    }
  }
  return counts;
}

std::string status_counts_csv(const std::array<StatusCounts, 3>& counts) {
  std::ostringstream os;
  os << "solver,optimal,satisfied,unresolved\n";
  for (SolverId s : kPortfolio) {
    const StatusCounts& c = counts[static_cast<int>(s)];
    os << solver_tag(s) << ',' << c.optimal << ',' << c.satisfied << ',' << c.unresolved << '\n';
  }
  return os.str();
}

std::vector<MeansRow> summarize_means(const std::vector<ResultRow>& results) {
  struct Acc {
    std::int64_t n = 0;
    double ms = 0.0;
    double obj = 0.0;
  };
  std::map<std::pair<int, int>, std::array<Acc, 3>> groups;
  for (const ResultRow& r : results) {
    auto& g = groups[{r.n_jobs, r.n_machines}];
    for (int s = 0; s < 3; ++s) {
      const SolverCell& c = r.cells[s];
      if (!c.solved()) continue;
      ++g[s].n;
      g[s].ms += static_cast<double>(c.solve_time_ms);
      g[s].obj += *c.objective;
    }
  }
  std::vector<MeansRow> out;
  for (const auto& [key, acc] : groups) {
    MeansRow row;
    row.n_jobs = key.first;
    row.n_machines = key.second;
    for (int s = 0; s < 3; ++s) {
      row.cells[s].solved = acc[s].n;
      if (acc[s].n > 0) {
        row.cells[s].mean_ms = acc[s].ms / static_cast<double>(acc[s].n);
        row.cells[s].mean_obj = acc[s].obj / static_cast<double>(acc[s].n);
      }
    }
    out.push_back(row);
  }
  return out;
}

std::string means_csv(const std::vector<MeansRow>& rows) {
  std::ostringstream os;
  os << "jobs,machines";
  for (SolverId s : kPortfolio) os << ',' << solver_tag(s) << "_mean_ms," << solver_tag(s) << "_mean_obj";
  os << '\n';
  for (const MeansRow& r : rows) {
    os << r.n_jobs << ',' << r.n_machines;
    for (const MeanCell& c : r.cells) {
      os << ',' << (c.mean_ms ? format_real(*c.mean_ms) : "Timeout") << ','
         << (c.mean_obj ? format_real(*c.mean_obj) : "Timeout");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gjsp
