#include "gjsp/objective.hpp"

#include <algorithm>

#include "gjsp/error.hpp"

namespace gjsp {

ObjectiveBounds objective_bounds(const Instance& in) {
  ObjectiveBounds b;
  for (int j = 0; j < in.n_jobs; ++j) {
    Time job_min = 0;
    for (int t = 0; t < in.n_machines; ++t) {
      b.mk_ub += in.max_proc(j, t);
      job_min += in.min_proc(j, t);
      b.en_ub += in.max_energy(j, t);
      b.en_lb += in.min_energy(j, t);
    }
    b.mk_lb = std::max(b.mk_lb, job_min);
  }
  return b;
}

ObjectiveComponents evaluate_unchecked(const Instance& in, const Schedule& sched) {
  ObjectiveComponents c;
  for (int j = 0; j < in.n_jobs; ++j) {
    for (int t = 0; t < in.n_machines; ++t) {
      Time done = completion_of(in, sched, j, t);
      c.makespan = std::max(c.makespan, done);
      c.energy += in.energy(j, t, sched.speed_of(j, t));
      if (auto due = in.due_of(j, t)) c.tardiness += std::max<Time>(0, done - *due);
    }
  }
  return c;
}

ObjectiveComponents objective_components(const Instance& in, const Schedule& sched) {
  auto violations = check_feasibility(in, sched);
  if (!violations.empty()) {
    throw InfeasibleInput("schedule is infeasible: " + describe(violations.front()));
  }
  return evaluate_unchecked(in, sched);
}

double scalarize(const ObjectiveComponents& c, const ObjectiveBounds& b) {
  double value = 0.0;
  if (b.mk_ub > b.mk_lb) {
    value += static_cast<double>(c.makespan - b.mk_lb) / static_cast<double>(b.mk_ub - b.mk_lb);
  }
  if (b.en_ub > b.en_lb) {
    value += static_cast<double>(c.energy - b.en_lb) / static_cast<double>(b.en_ub - b.en_lb);
  }
  if (b.mk_ub > 0) {
    value += static_cast<double>(c.tardiness) / static_cast<double>(b.mk_ub);
  }
  return value;
}

ObjectiveBreakdown make_breakdown(const ObjectiveComponents& c, const ObjectiveBounds& b) {
  return {c.makespan, c.energy, c.tardiness, scalarize(c, b), b};
}

ObjectiveBreakdown normalized_objective(const Instance& in, const Schedule& sched) {
  return make_breakdown(objective_components(in, sched), objective_bounds(in));
}

}  // namespace gjsp
