#include "gjsp/solvers/clock.hpp"

#include <algorithm>

namespace gjsp {

SearchClock::SearchClock(ClockMode mode, std::int64_t budget_ms, std::int64_t visits_per_step)
    : mode_(mode),
      budget_ms_(budget_ms),
      visits_per_step_(std::max<std::int64_t>(1, visits_per_step)),
      started_(std::chrono::steady_clock::now()) {
  expired_ = budget_ms_ <= 0;
}

bool SearchClock::over_budget() const { return elapsed_ms() >= budget_ms_; }

bool SearchClock::tick(std::int64_t steps) {
  if (expired_) return true;
  const std::int64_t before = steps_ / kCheckInterval;
  steps_ += std::max<std::int64_t>(1, steps);
  if (steps_ / kCheckInterval != before && over_budget()) expired_ = true;
  return expired_;
}

std::int64_t SearchClock::elapsed_ms() const {
  if (mode_ == ClockMode::Virtual) return steps_ * visits_per_step_ / kVirtualVisitsPerMs;
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               started_)
      .count();
}

}  // namespace gjsp
