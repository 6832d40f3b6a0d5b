#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gjsp/harness/results.hpp"

namespace gjsp {

struct StatusCounts {
  std::int64_t optimal = 0;
  std::int64_t satisfied = 0;
  std::int64_t unresolved = 0;

  std::int64_t total() const { return optimal + satisfied + unresolved; }
  bool operator==(const StatusCounts&) const = default;
};

std::array<StatusCounts, 3> summarize_status(const std::vector<ResultRow>& results);
// solver,optimal,satisfied,unresolved
std::string status_counts_csv(const std::array<StatusCounts, 3>& counts);

struct MeanCell {
  std::int64_t solved = 0;
  std::optional<double> mean_ms;   // over solved instances
  std::optional<double> mean_obj;  // over solved instances
};

struct MeansRow {
  int n_jobs = 0;
  int n_machines = 0;
  std::array<MeanCell, 3> cells;
};

// One row per (jobs, machines) group, ascending.
std::vector<MeansRow> summarize_means(const std::vector<ResultRow>& results);
// jobs,machines,<tag>_mean_ms,<tag>_mean_obj,...; empty cells read Timeout.
std::string means_csv(const std::vector<MeansRow>& rows);

}  // namespace gjsp
