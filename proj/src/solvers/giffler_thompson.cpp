#include "gjsp/solvers/giffler_thompson.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "gjsp/error.hpp"

namespace gjsp {

GtState::GtState(const SolverContext& ctx)
    : ctx_(&ctx),
      next_task_(ctx.n_jobs, 0),
      job_ready_(ctx.n_jobs, 0),
      machine_ready_(ctx.n_machines, 0),
      rest_job_work_(ctx.n_jobs, 0),
      rest_machine_work_(ctx.n_machines, 0),
      start_(ctx.n_ops, 0),
      speed_(ctx.n_ops, 0),
      orders_(ctx.n_machines) {
  for (int op = 0; op < ctx.n_ops; ++op) {
    rest_job_work_[op / ctx.n_machines] += ctx.min_proc[op];
    rest_machine_work_[ctx.machine[op]] += ctx.min_proc[op];
    rest_energy_ += ctx.min_energy[op];
  }
  for (auto& order : orders_) order.reserve(ctx.n_jobs);
  frames_.reserve(ctx.n_ops);
  const auto& b = ctx.bounds;
  if (b.mk_ub > b.mk_lb) mk_scale_ = 1.0 / static_cast<double>(b.mk_ub - b.mk_lb);
  if (b.en_ub > b.en_lb) en_scale_ = 1.0 / static_cast<double>(b.en_ub - b.en_lb);
  if (b.mk_ub > 0) tt_scale_ = 1.0 / static_cast<double>(b.mk_ub);
}

Time GtState::earliest_start(int j) const {
  const int op = next_op(j);
  return std::max({job_ready_[j], machine_ready_[ctx_->machine[op]], ctx_->release[op]});
}

void GtState::push(int j, int s) {
  const int op = next_op(j);
  const int m = ctx_->machine[op];
  frames_.push_back({j, job_ready_[j], machine_ready_[m], comp_});
  const Time begin = earliest_start(j);
  const Time end = begin + ctx_->p(op, s);
  start_[op] = begin;
  speed_[op] = s;
  job_ready_[j] = end;
  machine_ready_[m] = end;
  comp_.makespan = std::max(comp_.makespan, end);
  comp_.energy += ctx_->e(op, s);
  comp_.tardiness += ctx_->tardiness(op, end);
  rest_job_work_[j] -= ctx_->min_proc[op];
  rest_machine_work_[m] -= ctx_->min_proc[op];
  rest_energy_ -= ctx_->min_energy[op];
  orders_[m].push_back(j);
  ++next_task_[j];
  ++scheduled_;
}

void GtState::pop() {
  const Frame f = frames_.back();
  frames_.pop_back();
  --next_task_[f.job];
  --scheduled_;
  const int op = next_op(f.job);
  const int m = ctx_->machine[op];
  orders_[m].pop_back();
  rest_job_work_[f.job] += ctx_->min_proc[op];
  rest_machine_work_[m] += ctx_->min_proc[op];
  rest_energy_ += ctx_->min_energy[op];
  job_ready_[f.job] = f.job_ready;
  machine_ready_[m] = f.machine_ready;
  comp_ = f.comp;
}

double GtState::lower_bound() const {
  Time makespan = comp_.makespan;
  for (int j = 0; j < ctx_->n_jobs; ++j) {
    const int op = next_op(j);
    if (op < 0) continue;
    makespan = std::max(makespan, std::max(job_ready_[j], ctx_->release[op]) + rest_job_work_[j]);
  }
  for (int m = 0; m < ctx_->n_machines; ++m) {
    if (rest_machine_work_[m] > 0) {
      makespan = std::max(makespan, machine_ready_[m] + rest_machine_work_[m]);
    }
  }
  return ctx_->value({makespan, comp_.energy + rest_energy_, comp_.tardiness});
}

double GtState::marginal_cost(int j, int s) const {
  const int op = next_op(j);
  const Time end = earliest_start(j) + ctx_->p(op, s);
  return mk_scale_ * static_cast<double>(std::max(comp_.makespan, end) - comp_.makespan) +
         en_scale_ * static_cast<double>(ctx_->e(op, s) - ctx_->min_energy[op]) +
         tt_scale_ * static_cast<double>(ctx_->tardiness(op, end));
}

Candidate GtState::to_candidate() const {
  Candidate c;
  c.orders = orders_;
  c.speeds = speed_;
  c.starts = start_;
  c.components = comp_;
  c.value = ctx_->value(comp_);
  return c;
}

Candidate gt_construct(const SolverContext& ctx, ConstructionMode mode, Rng* rng) {
  if (mode == ConstructionMode::Randomized && rng == nullptr) {
    throw std::invalid_argument("randomized construction needs a generator");
  }
  GtState state(ctx);
  std::vector<int> conflict;
  while (!state.complete()) {
    state.conflict_set(conflict);
    if (mode == ConstructionMode::Randomized) {
      const int j = conflict[rng->uniform_int(0, static_cast<std::int64_t>(conflict.size()) - 1)];
      const int s = static_cast<int>(rng->uniform_int(0, ctx.n_speeds - 1));
      state.push(j, s);
      continue;
    }
    int best_j = -1, best_s = -1;
    double best_cost = 0.0;
    Time best_end = 0;
    for (int j : conflict) {
      const int op = state.next_op(j);
      const Time begin = state.earliest_start(j);
      for (int s = 0; s < ctx.n_speeds; ++s) {
        const double cost = state.marginal_cost(j, s);
        const Time end = begin + ctx.p(op, s);
        bool take = best_j < 0 || cost < best_cost - kValueTolerance;
        if (!take && best_j >= 0 && cost <= best_cost + kValueTolerance) {
          take = std::tie(end, j, s) < std::tie(best_end, best_j, best_s);
        }
        if (take) {
          best_j = j;
          best_s = s;
          best_cost = cost;
          best_end = end;
        }
      }
    }
    state.push(best_j, best_s);
  }
  return state.to_candidate();
}

Schedule giffler_thompson_construct(const Instance& instance, ConstructionMode mode, Rng* rng) {
  require_valid(instance);
  SolverContext ctx(instance);
  return to_schedule(ctx, gt_construct(ctx, mode, rng));
}

}  // namespace gjsp
