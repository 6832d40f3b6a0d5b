#pragma once

#include <utility>

#include "gjsp/objective.hpp"
#include "gjsp/schedule.hpp"

namespace gjsp {

inline constexpr int kBruteForceMaxTasks = 9;
inline constexpr int kBruteForceMaxSpeeds = 2;

// Exhaustive optimum: every speed assignment, and for each one every active
// schedule (complete Giffler-Thompson branching with those fixed durations).
// Ties break on (makespan, energy, tardiness, speeds, starts). Throws TooLarge
// beyond 9 tasks or 2 speeds.
std::pair<Schedule, ObjectiveBreakdown> brute_force_optimum(const Instance& instance);

}  // namespace gjsp
