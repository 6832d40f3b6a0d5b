#pragma once

// Straight-line re-implementations used as test oracles. They share no code
// with the library beyond the data types.

#include <cstdint>
#include <vector>

#include "gjsp/features.hpp"
#include "gjsp/instance.hpp"
#include "gjsp/objective.hpp"
#include "gjsp/schedule.hpp"

namespace oracle {

using gjsp::Instance;
using gjsp::Schedule;

// Hand-built instance. proc[j][t] and energy[j][t] list the per-speed values.
Instance make_instance(const std::vector<std::vector<int>>& routes,
                       const std::vector<std::vector<std::vector<std::int64_t>>>& proc,
                       const std::vector<std::vector<std::vector<std::int64_t>>>& energy);

Instance seeded(int jobs, int machines, int rddd, int speeds, std::uint64_t seed,
                gjsp::Distribution dist = gjsp::Distribution::Uniform);

struct Components {
  std::int64_t makespan = 0;
  std::int64_t energy = 0;
  std::int64_t tardiness = 0;
};

Components components(const Instance& inst, const Schedule& s);
double scalarized(const Instance& inst, const Components& c);

// Pairwise interval checks; true when nothing is violated.
bool feasible(const Instance& inst, const Schedule& s);

// Fixed-point earliest-start timing of per-machine job orders; empty when the
// orders are cyclic.
std::vector<std::int64_t> decode(const Instance& inst, const std::vector<std::vector<int>>& orders,
                                 const std::vector<int>& speeds);

// Minimum scalarized value over every machine permutation and speed vector.
double optimum(const Instance& inst);

gjsp::FeatureVector features(const Instance& inst);

// 50 * 1500^rank per characteristic, summed, capped at 300000.
std::int64_t budget(int jobs, int machines, int rddd, int speeds);

}  // namespace oracle
