#include "gjsp/harness/selector.hpp"

#include <string>

#include "gjsp/error.hpp"
#include "gjsp/gen/budget.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {

SolverId solver_from_label(int label) {
  for (SolverId s : kPortfolio) {
    if (static_cast<int>(s) == label) return s;
  }
  throw SchemaMismatch("model label " + std::to_string(label) + " is not a portfolio solver");
}

Recommendation recommend(const ml::TrainedModel& model, const Instance& instance) {
  Recommendation r;
  r.features = extract_features(instance);
  const auto a = r.features.to_array();
  r.solver = solver_from_label(ml::predict(model, ml::Row(a.begin(), a.end())));
  return r;
}

Selection select_and_solve(const ml::TrainedModel& model, const Instance& instance,
                           std::optional<std::int64_t> budget, bool run,
                           const SolveOptions& base) {
  Selection out;
  out.recommendation = recommend(model, instance);
  if (run) {
    SolveOptions options = base;
    options.budget_ms = budget ? *budget : allocate_budget(instance);
    out.outcome = solve(out.recommendation.solver, instance, options);
  }
  return out;
}

}  // namespace gjsp
