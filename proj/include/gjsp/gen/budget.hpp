#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gjsp/gen/generator.hpp"

namespace gjsp {

// Per-instance time budget. Each of the four characteristics (jobs, machines,
// rddd level, speeds) contributes per_char_min_ms * ratio^r with r its rank
// position in the grid set and ratio = per_char_max_ms / per_char_min_ms.
struct BudgetPolicy {
  double per_char_min_ms = 50.0;
  double per_char_max_ms = 75'000.0;
  double total_cap_ms = 300'000.0;
  std::vector<int> jobs_set{5, 10, 20, 25, 50, 100};
  std::vector<int> machines_set{5, 10, 20, 25, 50, 100};
  std::vector<int> rddd_set{0, 1, 2};
  std::vector<int> speeds_set{1, 3, 5};
  bool strict = false;  // reject values outside the grid sets
};

// Rank position of `value` within `set`, in [0, 1]. Out-of-set values take the
// rank of the nearest member (lower member on ties) unless strict.
double rank_fraction(const std::vector<int>& set, int value, bool strict);

// The four per-characteristic terms in ms (jobs, machines, rddd, speeds).
std::array<double, 4> budget_terms(const GeneratorConfig& config, const BudgetPolicy& policy = {});

std::int64_t allocate_budget(const GeneratorConfig& config, const BudgetPolicy& policy = {});
std::int64_t allocate_budget(const Instance& instance, const BudgetPolicy& policy = {});

}  // namespace gjsp
