#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gjsp/objective.hpp"
#include "gjsp/schedule.hpp"

namespace gjsp {

// Portfolio members, in the fixed order used for every tie-break.
enum class SolverId : int { ExactBnB = 0, GreedyLS = 1, Anneal = 2 };

inline constexpr std::array<SolverId, 3> kPortfolio = {SolverId::ExactBnB, SolverId::GreedyLS,
                                                       SolverId::Anneal};

std::string_view solver_tag(SolverId id);  // "bnb", "gls", "sa"
SolverId parse_solver_tag(std::string_view tag);

enum class SolveStatus : int { Optimal = 0, Satisfied = 1, Unresolved = 2 };

std::string_view to_string(SolveStatus status);
SolveStatus parse_status(std::string_view name);

// Wall: real elapsed time. Virtual: elapsed time derived from the amount of
// search work done, so truncated runs are reproducible on any machine.
enum class ClockMode : int { Wall = 0, Virtual = 1 };

std::string_view to_string(ClockMode mode);
ClockMode parse_clock_mode(std::string_view name);

struct IncumbentRecord {
  std::int64_t elapsed_ms = 0;
  double value = 0.0;
};

struct SearchStats {
  std::int64_t nodes_expanded = 0;  // branch-and-bound nodes
  std::int64_t moves_tried = 0;     // local-search / annealing proposals
  std::vector<IncumbentRecord> incumbents;
  bool proof_complete = false;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unresolved;
  SolverId solver = SolverId::ExactBnB;
  std::optional<Schedule> best;
  std::optional<ObjectiveBreakdown> objective;
  std::int64_t solve_time_ms = 0;
  std::int64_t budget_ms = 0;
  std::uint64_t seed = 0;
  SearchStats stats;
  std::string note;
};

using IncumbentCallback = std::function<void(const Schedule&, const ObjectiveBreakdown&)>;

struct SolveOptions {
  std::int64_t budget_ms = 1000;
  std::uint64_t seed = 0;
  ClockMode clock = ClockMode::Wall;
  IncumbentCallback on_incumbent;  // called on every new incumbent
};

}  // namespace gjsp
