#include "gjsp/solvers/context.hpp"

#include <tuple>

namespace gjsp {

SolverContext::SolverContext(const Instance& in)
    : instance(&in),
      n_jobs(in.n_jobs),
      n_machines(in.n_machines),
      n_speeds(in.n_speeds),
      n_ops(in.n_jobs * in.n_machines),
      proc(static_cast<std::size_t>(n_ops) * n_speeds),
      energy(proc.size()),
      machine(n_ops),
      release(n_ops),
      due(n_ops),
      min_proc(n_ops),
      max_proc(n_ops),
      min_energy(n_ops),
      bounds(objective_bounds(in)) {
  for (int j = 0; j < n_jobs; ++j) {
    for (int t = 0; t < n_machines; ++t) {
      const int op = j * n_machines + t;
      for (int s = 0; s < n_speeds; ++s) {
        proc[op * n_speeds + s] = in.proc(j, t, s);
        energy[op * n_speeds + s] = in.energy(j, t, s);
      }
      machine[op] = in.machine_of(j, t);
      release[op] = in.release_of(j, t);
      due[op] = in.due_of(j, t).value_or(kNoDue);
      min_proc[op] = in.min_proc(j, t);
      max_proc[op] = in.max_proc(j, t);
      min_energy[op] = in.min_energy(j, t);
    }
  }
}

Schedule to_schedule(const SolverContext& ctx, const Candidate& c) {
  Schedule s(ctx.n_jobs, ctx.n_machines);
  s.start = c.starts;
  s.speed = c.speeds;
  return s;
}

bool evaluate_candidate(const SolverContext& ctx, SequenceDecoder& decoder, Candidate& c) {
  if (!decoder.decode(c.orders, c.speeds, c.starts)) return false;
  ObjectiveComponents comp;
  for (int op = 0; op < ctx.n_ops; ++op) {
    const Time done = c.starts[op] + ctx.p(op, c.speeds[op]);
    comp.makespan = std::max(comp.makespan, done);
    comp.energy += ctx.e(op, c.speeds[op]);
    comp.tardiness += ctx.tardiness(op, done);
  }
  c.components = comp;
  c.value = ctx.value(comp);
  return true;
}

bool lexicographically_better(const Candidate& a, const Candidate& b) {
  if (a.value < b.value - kValueTolerance) return true;
  if (b.value < a.value - kValueTolerance) return false;
  return std::tie(a.components, a.speeds, a.starts) < std::tie(b.components, b.speeds, b.starts);
}

bool IncumbentTracker::offer(const Candidate& c) {
  if (has_ && !(c.value < best_.value - kValueTolerance)) return false;
  has_ = true;
  best_ = c;
  stats_->incumbents.push_back({clock_->elapsed_ms(), c.value});
  if (*callback_) {
    (*callback_)(to_schedule(*ctx_, c), make_breakdown(c.components, ctx_->bounds));
  }
  return true;
}

SolveOutcome finish_outcome(const SolverContext& ctx, SolverId solver, const SolveOptions& options,
                            const SearchClock& clock, const IncumbentTracker& incumbent,
                            SearchStats stats, bool proof_complete) {
  SolveOutcome out;
  out.solver = solver;
  out.budget_ms = options.budget_ms;
  out.seed = options.seed;
  out.solve_time_ms = clock.elapsed_ms();
  stats.proof_complete = proof_complete;
  out.stats = std::move(stats);
  if (incumbent.has_value()) {
    out.best = to_schedule(ctx, incumbent.best());
    out.objective = make_breakdown(incumbent.best().components, ctx.bounds);
    out.status = proof_complete ? SolveStatus::Optimal : SolveStatus::Satisfied;
  } else {
    out.status = SolveStatus::Unresolved;
  }
  return out;
}

}  // namespace gjsp
