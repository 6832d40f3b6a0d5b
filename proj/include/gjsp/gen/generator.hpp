#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gjsp/gen/rng.hpp"
#include "gjsp/instance.hpp"

namespace gjsp {

// Time-window construction knobs. Defaults are the documented generator law.
struct WindowParams {
  double tau_min = 1.0;           // due slack factor range, Dd = Rd + ceil(tau * W)
  double tau_max = 1.5;
  double release_fraction = 0.5;  // Rd ~ U{0, floor(release_fraction * W)}

  bool operator==(const WindowParams&) const = default;
};

struct GeneratorConfig {
  int n_jobs = 5;
  int n_machines = 5;
  int rddd_level = 0;
  int n_speeds = 1;
  Distribution distribution = Distribution::Uniform;
  std::uint64_t seed = 0;
  WindowParams windows;

  bool operator==(const GeneratorConfig&) const = default;
};

std::string instance_id(const GeneratorConfig& config);

struct BaseTables {
  std::vector<std::vector<std::int64_t>> proc;    // [job][task]
  std::vector<std::vector<std::int64_t>> energy;  // [job][task]
};

// Processing and energy tables at nominal speed. Proc and energy come from
// independent streams derived from the config seed.
BaseTables sample_base_tables(const GeneratorConfig& config);

// Single draw from the configured family: uniform U{1..99}; normal
// round(N(50, 15)) clamped to [1, 99]; exponential round(Exp(mean 50))
// clamped to [1, 297].
std::int64_t sample_value(Distribution d, Rng& rng);

// Speed multiplier 1 + 0.5 s: time base / v (rounded, >= 1), energy base * v^2
// (rounded), followed by a monotone repair along the speed axis.
void build_speed_tables(const BaseTables& base, int n_speeds, Table3& proc, Table3& energy);

// Fills job_windows / task_windows of a draft instance whose proc table is built.
void generate_windows(Instance& draft, WindowLevel level, const WindowParams& params, Rng& rng);

Instance generate_instance(const GeneratorConfig& config);

}  // namespace gjsp

namespace gjsp {

// Job-level window from its draws: Dd = Rd + ceil(tau * work).
Window job_window_from_draws(Time work, Time release, double tau);

// Splits a job window across the route proportionally to the cumulative
// nominal processing times; each task window is at least its fastest duration.
std::vector<Window> slice_job_window(const Window& job, const std::vector<Time>& nominal,
                                     const std::vector<Time>& fastest);

}  // namespace gjsp
