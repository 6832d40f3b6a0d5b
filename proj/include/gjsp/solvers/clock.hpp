#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "gjsp/solvers/outcome.hpp"

namespace gjsp {

// Work units that make up one virtual millisecond, calibrated so virtual and
// wall time roughly agree on a single 2020s core. A decoded annealing
// proposal on n tasks costs 8 + n units, a local-search proposal 2 + 2n/5
// (most are rejected before the move list is rebuilt), a branch-and-bound
// node a constant (its cost barely grows with n).
inline constexpr std::int64_t kVirtualVisitsPerMs = 13'000;
inline constexpr std::int64_t kBnbVisitsPerNode = 5;
inline std::int64_t local_search_visits(int n_tasks) { return 2 + 2 * n_tasks / 5; }
inline std::int64_t anneal_visits(int n_tasks) { return 8 + n_tasks; }

// Budget bookkeeping shared by the solvers. The budget is checked every
// kCheckInterval steps, so a solver may overrun by that many steps.
class SearchClock {
 public:
  static constexpr std::int64_t kCheckInterval = 64;

  SearchClock(ClockMode mode, std::int64_t budget_ms, std::int64_t visits_per_step);

  // Accounts search steps. Returns true once the budget is exhausted.
  bool tick(std::int64_t steps = 1);
  bool expired() const { return expired_; }
  std::int64_t elapsed_ms() const;
  std::int64_t budget_ms() const { return budget_ms_; }

 private:
  bool over_budget() const;

  ClockMode mode_;
  std::int64_t budget_ms_;
  std::int64_t visits_per_step_;
  std::int64_t steps_ = 0;
  bool expired_ = false;
  std::chrono::steady_clock::time_point started_;
};

}  // namespace gjsp
