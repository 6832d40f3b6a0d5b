#pragma once

#include <cstdint>
#include <optional>

#include "gjsp/features.hpp"
#include "gjsp/ml/models.hpp"
#include "gjsp/solvers/outcome.hpp"

namespace gjsp {

struct Recommendation {
  SolverId solver = SolverId::ExactBnB;
  FeatureVector features;
};

struct Selection {
  Recommendation recommendation;
  std::optional<SolveOutcome> outcome;  // present when run
};

// Model label -> solver; SchemaMismatch for a label outside the portfolio.
SolverId solver_from_label(int label);

Recommendation recommend(const ml::TrainedModel& model, const Instance& instance);

// Features, prediction, and with run = true the recommended solver under
// allocate_budget (or `budget` when given).
Selection select_and_solve(const ml::TrainedModel& model, const Instance& instance,
                           std::optional<std::int64_t> budget, bool run,
                           const SolveOptions& base = {});

}  // namespace gjsp
