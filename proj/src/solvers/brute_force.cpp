#include "gjsp/solvers/brute_force.hpp"

#include <string>
#include <vector>

#include "gjsp/error.hpp"
#include "gjsp/solvers/giffler_thompson.hpp"

namespace gjsp {
namespace {

struct Enumerator {
  const SolverContext& ctx;
  const std::vector<int>& speeds;
  bool have = false;
  Candidate best;

  void run(GtState& state) {
    if (state.complete()) {
      Candidate c = state.to_candidate();
      if (!have || lexicographically_better(c, best)) {
        best = std::move(c);
        have = true;
      }
      return;
    }
    std::vector<int> conflict;
    state.conflict_set([&](int op) { return ctx.p(op, speeds[op]); }, conflict);
    for (int j : conflict) {
      state.push(j, speeds[state.next_op(j)]);
      run(state);
      state.pop();
    }
  }
};

}  // namespace

std::pair<Schedule, ObjectiveBreakdown> brute_force_optimum(const Instance& instance) {
  require_valid(instance);
  if (instance.n_tasks() > kBruteForceMaxTasks || instance.n_speeds > kBruteForceMaxSpeeds) {
    throw TooLarge("brute force limited to " + std::to_string(kBruteForceMaxTasks) +
                   " tasks and " + std::to_string(kBruteForceMaxSpeeds) + " speeds");
  }
  SolverContext ctx(instance);
  std::vector<int> speeds(ctx.n_ops, 0);
  bool have = false;
  Candidate best;
  while (true) {
    Enumerator e{ctx, speeds, false, {}};
    GtState state(ctx);
    e.run(state);
    if (!have || lexicographically_better(e.best, best)) {
      best = std::move(e.best);
      have = true;
    }
    // Next speed assignment (odometer).
    int k = 0;
    while (k < ctx.n_ops && ++speeds[k] == ctx.n_speeds) speeds[k++] = 0;
    if (k == ctx.n_ops) break;
  }
  return {to_schedule(ctx, best), make_breakdown(best.components, ctx.bounds)};
}

}  // namespace gjsp
