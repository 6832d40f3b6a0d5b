#include "gjsp/gen/budget.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "gjsp/error.hpp"

namespace gjsp {

double rank_fraction(const std::vector<int>& set, int value, bool strict) {
  if (set.empty()) throw UnknownCharacteristicValue("empty grid set");
  std::size_t best = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] == value) {
      best = i;
      break;
    }
    if (strict && i + 1 == set.size()) {
      throw UnknownCharacteristicValue("value " + std::to_string(value) + " not in grid set");
    }
    if (std::abs(set[i] - value) < std::abs(set[best] - value)) best = i;
  }
  if (set.size() == 1) return 0.0;
  return static_cast<double>(best) / static_cast<double>(set.size() - 1);
}

std::array<double, 4> budget_terms(const GeneratorConfig& c, const BudgetPolicy& p) {
  const double ratio = p.per_char_max_ms / p.per_char_min_ms;
  const double ranks[4] = {
      rank_fraction(p.jobs_set, c.n_jobs, p.strict),
      rank_fraction(p.machines_set, c.n_machines, p.strict),
      rank_fraction(p.rddd_set, c.rddd_level, p.strict),
      rank_fraction(p.speeds_set, c.n_speeds, p.strict),
  };
  std::array<double, 4> terms{};
  for (int i = 0; i < 4; ++i) terms[i] = p.per_char_min_ms * std::pow(ratio, ranks[i]);
  return terms;
}

std::int64_t allocate_budget(const GeneratorConfig& c, const BudgetPolicy& p) {
  double total = 0.0;
  for (double term : budget_terms(c, p)) total += term;
  return std::llround(std::min(total, p.total_cap_ms));
}

std::int64_t allocate_budget(const Instance& in, const BudgetPolicy& p) {
  GeneratorConfig c;
  c.n_jobs = in.n_jobs;
  c.n_machines = in.n_machines;
  c.rddd_level = static_cast<int>(in.rddd_level);
  c.n_speeds = in.n_speeds;
  return allocate_budget(c, p);
}

}  // namespace gjsp
