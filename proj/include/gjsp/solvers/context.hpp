#pragma once

#include <limits>
#include <vector>

#include "gjsp/instance.hpp"
#include "gjsp/objective.hpp"
#include "gjsp/schedule.hpp"
#include "gjsp/solvers/clock.hpp"
#include "gjsp/solvers/outcome.hpp"

namespace gjsp {

inline constexpr double kValueTolerance = 1e-12;

// Flattened copy of an instance for the solver inner loops. Operations are
// indexed op = j * n_machines + t.
struct SolverContext {
  static constexpr Time kNoDue = std::numeric_limits<Time>::max();

  explicit SolverContext(const Instance& instance);

  const Instance* instance;
  int n_jobs;
  int n_machines;
  int n_speeds;
  int n_ops;
  std::vector<Time> proc;       // [op * n_speeds + s]
  std::vector<Energy> energy;   // [op * n_speeds + s]
  std::vector<int> machine;     // [op]
  std::vector<Time> release;    // [op]
  std::vector<Time> due;        // [op], kNoDue when not charged
  std::vector<Time> min_proc;   // [op]
  std::vector<Time> max_proc;   // [op]
  std::vector<Energy> min_energy;
  ObjectiveBounds bounds;

  Time p(int op, int s) const { return proc[op * n_speeds + s]; }
  Energy e(int op, int s) const { return energy[op * n_speeds + s]; }
  Time tardiness(int op, Time completion) const {
    return due[op] == kNoDue ? 0 : std::max<Time>(0, completion - due[op]);
  }
  double value(const ObjectiveComponents& c) const { return scalarize(c, bounds); }
};

// A complete sequencing decision with its decoded timing and objective.
struct Candidate {
  MachineOrders orders;
  std::vector<int> speeds;   // [op]
  std::vector<Time> starts;  // [op]
  ObjectiveComponents components;
  double value = 0.0;
};

Schedule to_schedule(const SolverContext& ctx, const Candidate& c);

// Decodes orders/speeds into starts and evaluates. Returns false if cyclic.
bool evaluate_candidate(const SolverContext& ctx, SequenceDecoder& decoder, Candidate& c);

// Orders the two candidates by value, then (makespan, energy, tardiness),
// then by (speeds, starts).
bool lexicographically_better(const Candidate& a, const Candidate& b);

// Best-so-far bookkeeping: strict improvements only, logged with elapsed time
// and forwarded to the optional callback.
class IncumbentTracker {
 public:
  IncumbentTracker(const SolverContext& ctx, const SearchClock& clock, SearchStats& stats,
                   const IncumbentCallback& callback)
      : ctx_(&ctx), clock_(&clock), stats_(&stats), callback_(&callback) {}

  bool has_value() const { return has_; }
  double value() const { return best_.value; }
  const Candidate& best() const { return best_; }

  // Returns true when c strictly improves the incumbent.
  bool offer(const Candidate& c);

 private:
  const SolverContext* ctx_;
  const SearchClock* clock_;
  SearchStats* stats_;
  const IncumbentCallback* callback_;
  bool has_ = false;
  Candidate best_;
};

// Fills the outcome fields shared by every solver.
SolveOutcome finish_outcome(const SolverContext& ctx, SolverId solver, const SolveOptions& options,
                            const SearchClock& clock, const IncumbentTracker& incumbent,
                            SearchStats stats, bool proof_complete);

}  // namespace gjsp
