#pragma once

#include <vector>

#include "gjsp/schedule.hpp"
#include "gjsp/solvers/context.hpp"

namespace gjsp {

struct Move {
  enum class Kind { Swap, Speed };
  Kind kind = Kind::Swap;
  int machine = -1;   // Swap: machine whose sequence changes
  int position = -1;  // Swap: exchange positions position and position + 1
  int job = -1;       // Speed: task whose speed changes
  int task = -1;
  int speed = -1;     // Speed: new speed index

  bool operator==(const Move&) const = default;
};

// Candidate moves of a decoded solution, in deterministic order:
//   1. swaps of machine-adjacent pairs joined by a critical arc of the
//      makespan graph, by (machine, position);
//   2. one task's speed -1 then +1, by (job, task).
std::vector<Move> list_moves(const SolverContext& ctx, const Candidate& current);

// Applies a move and re-decodes. Returns false for a cyclic sequencing.
bool apply_move(const SolverContext& ctx, SequenceDecoder& decoder, const Candidate& current,
                const Move& move, Candidate& out);

struct Neighbor {
  Move move;
  Schedule schedule;

  bool operator==(const Neighbor&) const = default;
};

// Every acyclic neighbor of a feasible schedule, decoded.
std::vector<Neighbor> enumerate_neighbors(const Instance& instance, const Schedule& schedule);

// Builds a candidate (orders from start times) for an existing schedule.
Candidate candidate_from_schedule(const SolverContext& ctx, const Schedule& schedule);

}  // namespace gjsp
