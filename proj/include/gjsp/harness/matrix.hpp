#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "gjsp/gen/budget.hpp"
#include "gjsp/harness/results.hpp"
#include "gjsp/instance.hpp"

namespace gjsp {

struct MatrixOptions {
  std::vector<SolverId> solvers{kPortfolio.begin(), kPortfolio.end()};
  int parallelism = 1;
  std::optional<std::int64_t> budget_override;  // replaces allocate_budget
  std::optional<std::int64_t> budget_cap;       // clamps allocate_budget
  ClockMode clock = ClockMode::Wall;
  std::uint64_t seed = 0;
  BudgetPolicy policy;
  // Append-only record of finished pairs; empty disables resume.
  std::filesystem::path journal;
};

// Budget used for one pair under the options.
std::int64_t pair_budget(const Instance& instance, const MatrixOptions& options);
// Seed handed to one solver on one instance.
std::uint64_t pair_seed(const Instance& instance, SolverId solver, std::uint64_t master);

// Every *.json file in the directory, read and sorted by id.
std::vector<Instance> load_instances(const std::filesystem::path& dir);

// Solves every (instance, solver) pair. Rows come back in id order whatever
// the completion order. Pairs already in the journal with the same budget are
// replayed instead of solved. Failures become Unresolved cells with a note.
// Solvers not selected are left Unresolved with note "not run".
std::vector<ResultRow> run_matrix(const std::vector<Instance>& instances,
                                  const MatrixOptions& options);

}  // namespace gjsp
