#pragma once

#include "gjsp/instance.hpp"
#include "gjsp/schedule.hpp"

namespace gjsp {

struct ObjectiveBounds {
  Time mk_ub = 0;    // serial sum of slowest processing times
  Time mk_lb = 0;    // longest job at fastest speeds
  Energy en_ub = 0;  // every task at its most expensive speed
  Energy en_lb = 0;  // every task at its cheapest speed

  bool operator==(const ObjectiveBounds&) const = default;
};

struct ObjectiveComponents {
  Time makespan = 0;
  Energy energy = 0;
  Time tardiness = 0;

  bool operator==(const ObjectiveComponents&) const = default;
  auto operator<=>(const ObjectiveComponents&) const = default;
};

struct ObjectiveBreakdown {
  Time makespan = 0;
  Energy energy = 0;
  Time tardiness = 0;
  double scalarized = 0.0;
  ObjectiveBounds bounds;

  ObjectiveComponents components() const { return {makespan, energy, tardiness}; }
  bool operator==(const ObjectiveBreakdown&) const = default;
};

ObjectiveBounds objective_bounds(const Instance& instance);

// Throws InfeasibleInput when check_feasibility reports violations.
ObjectiveComponents objective_components(const Instance& instance, const Schedule& schedule);

// Components of a schedule already known to be feasible.
ObjectiveComponents evaluate_unchecked(const Instance& instance, const Schedule& schedule);

// Normalized sum of the makespan, energy and tardiness terms. A term whose
// normalization range is zero contributes 0.
double scalarize(const ObjectiveComponents& c, const ObjectiveBounds& b);

ObjectiveBreakdown normalized_objective(const Instance& instance, const Schedule& schedule);

ObjectiveBreakdown make_breakdown(const ObjectiveComponents& c, const ObjectiveBounds& b);

}  // namespace gjsp
