#include "gjsp/gen/rng.hpp"
#include "gjsp/solvers/giffler_thompson.hpp"
#include "gjsp/solvers/neighborhood.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {

SolveOutcome solve_greedy_ls(const Instance& instance, const SolveOptions& options) {
  require_valid(instance);
  SolverContext ctx(instance);
  SearchStats stats;
  SearchClock clock(options.clock, options.budget_ms, local_search_visits(ctx.n_ops));
  IncumbentTracker incumbent(ctx, clock, stats, options.on_incumbent);
  SequenceDecoder decoder(instance);
  Rng rng(options.seed);

  if (!clock.expired()) {
    Candidate current = gt_construct(ctx, ConstructionMode::Deterministic, nullptr);
    incumbent.offer(current);
    Candidate next;
    while (!clock.tick()) {
      bool improved = false;
      for (const Move& mv : list_moves(ctx, current)) {
        ++stats.moves_tried;
        if (apply_move(ctx, decoder, current, mv, next) &&
            next.value < current.value - kValueTolerance) {
          std::swap(current, next);
          incumbent.offer(current);
          improved = true;
          break;
        }
        if (clock.tick()) break;
      }
      if (clock.expired()) break;
      if (!improved) {
        // A construction costs about as much as 4 * n_jobs proposals.
        if (clock.tick(4 * ctx.n_jobs)) break;
        current = gt_construct(ctx, ConstructionMode::Randomized, &rng);
        incumbent.offer(current);
      }
    }
  }
  return finish_outcome(ctx, SolverId::GreedyLS, options, clock, incumbent, std::move(stats), false);
}

}  // namespace gjsp
