#include <string>

#include "gjsp/error.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {

std::string_view solver_tag(SolverId id) {
  switch (id) {
    case SolverId::ExactBnB: return "bnb";
    case SolverId::GreedyLS: return "gls";
    case SolverId::Anneal: return "sa";
  }
  return "bnb";
}

SolverId parse_solver_tag(std::string_view tag) {
  for (SolverId id : kPortfolio) {
    if (solver_tag(id) == tag) return id;
  }
  throw ParseError("unknown solver '" + std::string(tag) + "'");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Satisfied: return "satisfied";
    case SolveStatus::Unresolved: return "unresolved";
  }
  return "unresolved";
}

SolveStatus parse_status(std::string_view name) {
  for (auto s : {SolveStatus::Optimal, SolveStatus::Satisfied, SolveStatus::Unresolved}) {
    if (to_string(s) == name) return s;
  }
  throw ParseError("unknown status '" + std::string(name) + "'");
}

std::string_view to_string(ClockMode mode) {
  return mode == ClockMode::Wall ? "wall" : "virtual";
}

ClockMode parse_clock_mode(std::string_view name) {
  if (name == "wall") return ClockMode::Wall;
  if (name == "virtual") return ClockMode::Virtual;
  throw ParseError("unknown clock mode '" + std::string(name) + "'");
}

SolveOutcome solve(SolverId solver, const Instance& instance, const SolveOptions& options) {
  switch (solver) {
    case SolverId::ExactBnB: return solve_bnb(instance, options);
    case SolverId::GreedyLS: return solve_greedy_ls(instance, options);
    case SolverId::Anneal: return solve_sa(instance, options);
  }
  return solve_bnb(instance, options);
}

}  // namespace gjsp
