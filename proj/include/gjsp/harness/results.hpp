#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gjsp/objective.hpp"
#include "gjsp/solvers/outcome.hpp"

namespace gjsp {

// One solver's outcome on one instance, as recorded in the results table.
struct SolverCell {
  SolveStatus status = SolveStatus::Unresolved;
  std::optional<double> objective;  // scalarized, absent when Unresolved
  std::optional<ObjectiveComponents> components;
  std::int64_t solve_time_ms = 0;
  std::int64_t budget_ms = 0;
  std::string note;

  bool solved() const { return objective.has_value(); }
  bool operator==(const SolverCell&) const = default;
};

struct ResultRow {
  std::string id;
  int n_jobs = 0;
  int n_machines = 0;
  int rddd_level = 0;
  int n_speeds = 0;
  std::array<SolverCell, 3> cells;  // indexed by SolverId

  SolverCell& cell(SolverId s) { return cells[static_cast<int>(s)]; }
  const SolverCell& cell(SolverId s) const { return cells[static_cast<int>(s)]; }
  bool operator==(const ResultRow&) const = default;
};

SolverCell cell_from_outcome(const SolveOutcome& outcome);

// Header, then one line per row in id order. Reals use 12 significant digits.
std::string results_to_csv(std::vector<ResultRow> rows);
std::vector<ResultRow> results_from_csv(const std::string& text);  // SchemaMismatch, ParseError

void write_results(const std::filesystem::path& path, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results(const std::filesystem::path& path);

}  // namespace gjsp
