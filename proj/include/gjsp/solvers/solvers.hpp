#pragma once

#include "gjsp/instance.hpp"
#include "gjsp/solvers/outcome.hpp"

namespace gjsp {

// Depth-first branch and bound over Giffler-Thompson branching x speed
// choices. Optimal when the tree is exhausted within budget.
SolveOutcome solve_bnb(const Instance& instance, const SolveOptions& options);

// Deterministic construction, first-improvement descent, seeded random
// restarts from randomized constructions at local optima. Never Optimal.
SolveOutcome solve_greedy_ls(const Instance& instance, const SolveOptions& options);

// Simulated annealing from a randomized construction. Never Optimal.
SolveOutcome solve_sa(const Instance& instance, const SolveOptions& options);

SolveOutcome solve(SolverId solver, const Instance& instance, const SolveOptions& options);

}  // namespace gjsp
