#include "gjsp/harness/results.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gjsp/error.hpp"
#include "gjsp/harness/csv.hpp"
#include "gjsp/instance_io.hpp"

namespace gjsp {
namespace {

const std::vector<std::string>& cell_columns() {
  static const std::vector<std::string> cols = {"status",    "obj", "makespan",  "energy",
                                                "tardiness", "ms",  "budget_ms", "note"};
  return cols;
}

std::vector<std::string> results_columns() {
  std::vector<std::string> cols = {"id", "n_jobs", "n_machines", "rddd", "n_speeds"};
  for (SolverId s : kPortfolio) {
    for (const std::string& c : cell_columns()) cols.push_back(std::string(solver_tag(s)) + "_" + c);
  }
  return cols;
}

}  // namespace

SolverCell cell_from_outcome(const SolveOutcome& outcome) {
  SolverCell cell;
  cell.status = outcome.status;
  if (outcome.objective) {
    cell.objective = outcome.objective->scalarized;
    cell.components = ObjectiveComponents{outcome.objective->makespan, outcome.objective->energy,
                                          outcome.objective->tardiness};
  }
  cell.solve_time_ms = outcome.solve_time_ms;
  cell.budget_ms = outcome.budget_ms;
  cell.note = outcome.note;
  return cell;
}

std::string results_to_csv(std::vector<ResultRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) { return a.id < b.id; });
  std::ostringstream os;
  const auto cols = results_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const ResultRow& r : rows) {
    os << r.id << ',' << r.n_jobs << ',' << r.n_machines << ',' << r.rddd_level << ','
       << r.n_speeds;
    for (const SolverCell& c : r.cells) {
      os << ',' << to_string(c.status) << ',';
      if (c.objective) os << format_real(*c.objective);
      os << ',';
      if (c.components) os << c.components->makespan;
      os << ',';
      if (c.components) os << c.components->energy;
      os << ',';
      if (c.components) os << c.components->tardiness;
      os << ',' << c.solve_time_ms << ',' << c.budget_ms << ',' << csv_safe(c.note);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<ResultRow> results_from_csv(const std::string& text) {
  const auto table = parse_csv(text);
  if (table.empty()) throw SchemaMismatch("results file is empty");
  const auto expected = results_columns();
  if (table.front() != expected) throw SchemaMismatch("results header does not match");
  std::vector<ResultRow> rows;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& f = table[i];
    if (f.size() != expected.size()) {
      throw SchemaMismatch("results line " + std::to_string(i + 1) + " has " +
                           std::to_string(f.size()) + " fields");
    }
    ResultRow r;
    r.id = f[0];
    r.n_jobs = static_cast<int>(parse_integer(f[1]));
    r.n_machines = static_cast<int>(parse_integer(f[2]));
    r.rddd_level = static_cast<int>(parse_integer(f[3]));
    r.n_speeds = static_cast<int>(parse_integer(f[4]));
    std::size_t k = 5;
    for (SolverCell& c : r.cells) {
      c.status = parse_status(f[k]);
      if (!f[k + 1].empty()) c.objective = parse_real(f[k + 1]);
      if (!f[k + 2].empty()) {
        c.components = ObjectiveComponents{parse_integer(f[k + 2]), parse_integer(f[k + 3]),
                                           parse_integer(f[k + 4])};
      }
      c.solve_time_ms = parse_integer(f[k + 5]);
      c.budget_ms = parse_integer(f[k + 6]);
      c.note = f[k + 7];
      k += cell_columns().size();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_results(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  write_file(path, results_to_csv(rows));
}

std::vector<ResultRow> read_results(const std::filesystem::path& path) {
  return results_from_csv(read_file(path));
}

}  // namespace gjsp
