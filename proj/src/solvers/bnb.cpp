#include <algorithm>
#include <tuple>
#include <vector>

#include "gjsp/solvers/giffler_thompson.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {
namespace {

struct Child {
  double bound;
  Time end;
  int job;
  int speed;
};

class BranchAndBound {
 public:
  BranchAndBound(const SolverContext& ctx, const SolveOptions& options)
      : ctx_(ctx),
        clock_(options.clock, options.budget_ms, kBnbVisitsPerNode),
        incumbent_(ctx, clock_, stats_, options.on_incumbent),
        state_(ctx),
        options_(options) {}

  SolveOutcome run() {
    if (!clock_.expired()) dive();
    return finish_outcome(ctx_, SolverId::ExactBnB, options_, clock_, incumbent_, stats_,
                          !aborted_ && !clock_.expired());
  }

 private:
  bool pruned(double bound) const {
    return incumbent_.has_value() && bound >= incumbent_.value() - kValueTolerance;
  }

  void dive() {
    if (state_.complete()) {
      incumbent_.offer(state_.to_candidate());
      return;
    }
    if (clock_.tick()) {
      aborted_ = true;
      return;
    }
    ++stats_.nodes_expanded;

    std::vector<int> conflict;
    state_.conflict_set(conflict);
    std::vector<Child> children;
    children.reserve(conflict.size() * ctx_.n_speeds);
    for (int j : conflict) {
      const Time begin = state_.earliest_start(j);
      const int op = state_.next_op(j);
      for (int s = 0; s < ctx_.n_speeds; ++s) {
        state_.push(j, s);
        children.push_back({state_.lower_bound(), begin + ctx_.p(op, s), j, s});
        state_.pop();
      }
    }
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
      return std::tie(a.bound, a.end, a.job, a.speed) < std::tie(b.bound, b.end, b.job, b.speed);
    });
    for (const Child& child : children) {
      if (pruned(child.bound)) break;
      state_.push(child.job, child.speed);
      dive();
      state_.pop();
      if (aborted_) return;
    }
  }

  const SolverContext& ctx_;
  SearchStats stats_;
  SearchClock clock_;
  IncumbentTracker incumbent_;
  GtState state_;
  const SolveOptions& options_;
  bool aborted_ = false;
};

}  // namespace

SolveOutcome solve_bnb(const Instance& instance, const SolveOptions& options) {
  require_valid(instance);
  SolverContext ctx(instance);
  return BranchAndBound(ctx, options).run();
}

}  // namespace gjsp
