#include <cmath>
#include <vector>

#include "gjsp/gen/rng.hpp"
#include "gjsp/solvers/giffler_thompson.hpp"
#include "gjsp/solvers/neighborhood.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {
namespace {

constexpr int kCalibrationSamples = 30;
constexpr double kCalibrationAcceptance = 0.8;
constexpr double kCoolingFactor = 0.97;
constexpr int kCoolingPeriod = 100;
constexpr int kStagnationLimit = 2000;
constexpr double kFallbackTemperature = 1e-3;

}  // namespace

SolveOutcome solve_sa(const Instance& instance, const SolveOptions& options) {
  require_valid(instance);
  SolverContext ctx(instance);
  SearchStats stats;
  SearchClock clock(options.clock, options.budget_ms, anneal_visits(ctx.n_ops));
  IncumbentTracker incumbent(ctx, clock, stats, options.on_incumbent);
  SequenceDecoder decoder(instance);
  Rng rng(options.seed);

  if (clock.expired()) {
    return finish_outcome(ctx, SolverId::Anneal, options, clock, incumbent, std::move(stats), false);
  }

  Candidate current = gt_construct(ctx, ConstructionMode::Randomized, &rng);
  incumbent.offer(current);
  std::vector<Move> moves = list_moves(ctx, current);
  Candidate next;

  // Initial temperature: ~80% acceptance of sampled uphill moves.
  double uphill_sum = 0.0;
  int uphill = 0;
  for (int attempt = 0; attempt < 10 * kCalibrationSamples && uphill < kCalibrationSamples &&
                        !moves.empty() && !clock.tick();
       ++attempt) {
    const Move& mv = moves[rng.uniform_int(0, static_cast<std::int64_t>(moves.size()) - 1)];
    ++stats.moves_tried;
    if (apply_move(ctx, decoder, current, mv, next) && next.value > current.value) {
      uphill_sum += next.value - current.value;
      ++uphill;
    }
  }
  // No uphill sample yet: the fallback holds until the first uphill proposal.
  bool calibrated = uphill > 0;
  double initial_temperature =
      calibrated ? -(uphill_sum / uphill) / std::log(kCalibrationAcceptance) : kFallbackTemperature;
  double temperature = initial_temperature;

  std::int64_t proposals = 0;
  int since_improvement = 0;
  while (!clock.tick()) {
    if (moves.empty()) {
      // Nothing to perturb (e.g. one job, one speed): start over elsewhere.
      current = gt_construct(ctx, ConstructionMode::Randomized, &rng);
      incumbent.offer(current);
      moves = list_moves(ctx, current);
      continue;
    }
    const Move& mv = moves[rng.uniform_int(0, static_cast<std::int64_t>(moves.size()) - 1)];
    ++stats.moves_tried;
    ++proposals;
    bool improved_best = false;
    if (apply_move(ctx, decoder, current, mv, next)) {
      const double delta = next.value - current.value;
      if (!calibrated && delta > 0.0) {
        initial_temperature = -delta / std::log(kCalibrationAcceptance);
        temperature = initial_temperature;
        calibrated = true;
      }
      if (delta <= 0.0 || rng.uniform01() < std::exp(-delta / temperature)) {
        std::swap(current, next);
        moves = list_moves(ctx, current);
        improved_best = incumbent.offer(current);
      }
    }
    since_improvement = improved_best ? 0 : since_improvement + 1;
    if (proposals % kCoolingPeriod == 0) temperature *= kCoolingFactor;
    if (since_improvement >= kStagnationLimit) {
      temperature = initial_temperature;
      since_improvement = 0;
    }
  }
  return finish_outcome(ctx, SolverId::Anneal, options, clock, incumbent, std::move(stats), false);
}

}  // namespace gjsp
