#pragma once

#include <vector>

#include "gjsp/gen/rng.hpp"
#include "gjsp/schedule.hpp"
#include "gjsp/solvers/context.hpp"

namespace gjsp {

// Partial schedule grown by appending one operation at a time at its earliest
// start. Supports push/pop so tree searches can backtrack.
class GtState {
 public:
  explicit GtState(const SolverContext& ctx);

  bool complete() const { return scheduled_ == ctx_->n_ops; }
  int scheduled() const { return scheduled_; }
  // Next unscheduled operation of job j, or -1 when the job is finished.
  int next_op(int j) const {
    return next_task_[j] < ctx_->n_machines ? j * ctx_->n_machines + next_task_[j] : -1;
  }
  Time earliest_start(int j) const;

  // Jobs whose next operation belongs to the conflict set: the machine of the
  // operation with the smallest earliest completion under `duration(op)`, and
  // every operation on it able to start before that completion.
  template <typename Duration>
  void conflict_set(Duration duration, std::vector<int>& jobs) const;

  // Conflict set under the slowest durations. Contains every active schedule
  // for any speed assignment, which makes speed a free branching dimension.
  void conflict_set(std::vector<int>& jobs) const {
    conflict_set([this](int op) { return ctx_->max_proc[op]; }, jobs);
  }

  void push(int j, int s);
  void pop();

  // Scalarized value of the operations placed so far plus optimistic
  // completions: remaining fastest work per job and per machine, remaining
  // cheapest energy, tardiness already incurred.
  double lower_bound() const;
  // Objective increment of placing job j's next operation at speed s,
  // relative to the current partial schedule.
  double marginal_cost(int j, int s) const;

  const ObjectiveComponents& components() const { return comp_; }
  Candidate to_candidate() const;

 private:
  struct Frame {
    int job;
    Time job_ready;
    Time machine_ready;
    ObjectiveComponents comp;
  };

  const SolverContext* ctx_;
  std::vector<int> next_task_;
  std::vector<Time> job_ready_;
  std::vector<Time> machine_ready_;
  std::vector<Time> rest_job_work_;      // fastest remaining work per job
  std::vector<Time> rest_machine_work_;  // fastest remaining work per machine
  Energy rest_energy_ = 0;
  ObjectiveComponents comp_;
  std::vector<Time> start_;
  std::vector<int> speed_;
  MachineOrders orders_;
  std::vector<Frame> frames_;
  int scheduled_ = 0;
  double mk_scale_ = 0;
  double en_scale_ = 0;
  double tt_scale_ = 0;
};

template <typename Duration>
void GtState::conflict_set(Duration duration, std::vector<int>& jobs) const {
  jobs.clear();
  Time best_completion = std::numeric_limits<Time>::max();
  int best_job = -1;
  for (int j = 0; j < ctx_->n_jobs; ++j) {
    const int op = next_op(j);
    if (op < 0) continue;
    const Time c = earliest_start(j) + duration(op);
    if (c < best_completion) {
      best_completion = c;
      best_job = j;
    }
  }
  if (best_job < 0) return;
  const int m = ctx_->machine[next_op(best_job)];
  for (int j = 0; j < ctx_->n_jobs; ++j) {
    const int op = next_op(j);
    if (op >= 0 && ctx_->machine[op] == m && earliest_start(j) < best_completion) {
      jobs.push_back(j);
    }
  }
}

enum class ConstructionMode { Deterministic, Randomized };

// Active-schedule construction. Deterministic: the conflict-set operation and
// speed with the smallest marginal objective increase (ties by completion,
// job, speed). Randomized: uniform over the conflict set and over speeds.
Candidate gt_construct(const SolverContext& ctx, ConstructionMode mode, Rng* rng);

Schedule giffler_thompson_construct(const Instance& instance, ConstructionMode mode,
                                    Rng* rng = nullptr);

}  // namespace gjsp
