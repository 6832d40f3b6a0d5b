#include "gjsp/gen/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gjsp/error.hpp"

namespace gjsp {
namespace {

// Stream tags so routes, times, energies and windows never share draws.
constexpr std::uint64_t kRouteStream = 0x726F757465ULL;
constexpr std::uint64_t kProcStream = 0x70726F63ULL;
constexpr std::uint64_t kEnergyStream = 0x656E657267ULL;
constexpr std::uint64_t kWindowStream = 0x77696E646FULL;

}  // namespace

std::string instance_id(const GeneratorConfig& c) {
  return "J" + std::to_string(c.n_jobs) + "_M" + std::to_string(c.n_machines) + "_R" +
         std::to_string(c.rddd_level) + "_S" + std::to_string(c.n_speeds) + "_" +
         std::string(to_string(c.distribution)) + "_" + std::to_string(c.seed);
}

std::int64_t sample_value(Distribution d, Rng& rng) {
  switch (d) {
    case Distribution::Uniform: return rng.uniform_int(1, 99);
    case Distribution::Normal:
      return std::clamp<std::int64_t>(std::llround(rng.normal(50.0, 15.0)), 1, 99);
    case Distribution::Exponential:
      return std::clamp<std::int64_t>(std::llround(rng.exponential(50.0)), 1, 297);
  }
  return 1;
}

BaseTables sample_base_tables(const GeneratorConfig& config) {
  Rng proc_rng(mix_seed(config.seed, kProcStream));
  Rng energy_rng(mix_seed(config.seed, kEnergyStream));
  BaseTables base;
  base.proc.assign(config.n_jobs, std::vector<std::int64_t>(config.n_machines));
  base.energy.assign(config.n_jobs, std::vector<std::int64_t>(config.n_machines));
  for (int j = 0; j < config.n_jobs; ++j) {
    for (int t = 0; t < config.n_machines; ++t) {
      base.proc[j][t] = sample_value(config.distribution, proc_rng);
      base.energy[j][t] = sample_value(config.distribution, energy_rng);
    }
  }
  return base;
}

void build_speed_tables(const BaseTables& base, int n_speeds, Table3& proc, Table3& energy) {
  const int J = static_cast<int>(base.proc.size());
  const int T = J > 0 ? static_cast<int>(base.proc[0].size()) : 0;
  proc = Table3(J, T, n_speeds);
  energy = Table3(J, T, n_speeds);
  for (int j = 0; j < J; ++j) {
    for (int t = 0; t < T; ++t) {
      for (int s = 0; s < n_speeds; ++s) {
        const double v = 1.0 + 0.5 * s;
        proc(j, t, s) = std::max<std::int64_t>(
            1, std::llround(static_cast<double>(base.proc[j][t]) / v));
        energy(j, t, s) = std::llround(static_cast<double>(base.energy[j][t]) * v * v);
        if (s > 0) {
          proc(j, t, s) = std::min(proc(j, t, s), proc(j, t, s - 1));
          energy(j, t, s) = std::max(energy(j, t, s), energy(j, t, s - 1));
        }
      }
    }
  }
}

Window job_window_from_draws(Time work, Time release, double tau) {
  return {release, release + static_cast<Time>(std::ceil(tau * static_cast<double>(work)))};
}

std::vector<Window> slice_job_window(const Window& job, const std::vector<Time>& nominal,
                                     const std::vector<Time>& fastest) {
  const Time total = std::accumulate(nominal.begin(), nominal.end(), Time{0});
  const Time length = job.length();
  std::vector<Window> out;
  out.reserve(nominal.size());
  Time cumulative = 0;
  for (std::size_t t = 0; t < nominal.size(); ++t) {
    Window w;
    w.release = job.release + (length * cumulative) / total;
    cumulative += nominal[t];
    w.due = job.release + (length * cumulative + total - 1) / total;
    w.due = std::max(w.due, w.release + fastest[t]);
    out.push_back(w);
  }
  return out;
}

void generate_windows(Instance& draft, WindowLevel level, const WindowParams& params, Rng& rng) {
  draft.rddd_level = level;
  draft.job_windows.clear();
  draft.task_windows.clear();
  if (level == WindowLevel::None) return;
  for (int j = 0; j < draft.n_jobs; ++j) {
    std::vector<Time> nominal(draft.n_machines), fastest(draft.n_machines);
    for (int t = 0; t < draft.n_machines; ++t) {
      nominal[t] = draft.proc(j, t, 0);
      fastest[t] = draft.min_proc(j, t);
    }
    const Time work = std::accumulate(nominal.begin(), nominal.end(), Time{0});
    const Time release = rng.uniform_int(
        0, static_cast<Time>(std::floor(params.release_fraction * static_cast<double>(work))));
    const double tau = rng.uniform_real(params.tau_min, params.tau_max);
    Window job = job_window_from_draws(work, release, tau);
    if (level == WindowLevel::Job) {
      draft.job_windows.push_back(job);
    } else {
      draft.task_windows.push_back(slice_job_window(job, nominal, fastest));
    }
  }
}

Instance generate_instance(const GeneratorConfig& config) {
  if (config.n_jobs <= 0 || config.n_machines <= 0 || config.n_speeds <= 0) {
    throw InvalidInstance("generator dimensions must be positive");
  }
  Instance in;
  in.id = instance_id(config);
  in.n_jobs = config.n_jobs;
  in.n_machines = config.n_machines;
  in.n_speeds = config.n_speeds;
  in.distribution = config.distribution;
  in.seed = config.seed;

  Rng route_rng(mix_seed(config.seed, kRouteStream));
  in.routes.resize(config.n_jobs);
  for (auto& route : in.routes) {
    route.resize(config.n_machines);
    std::iota(route.begin(), route.end(), 0);
    route_rng.shuffle(route);
  }

  build_speed_tables(sample_base_tables(config), config.n_speeds, in.proc, in.energy);

  Rng window_rng(mix_seed(config.seed, kWindowStream));
  generate_windows(in, window_level_from_int(config.rddd_level), config.windows, window_rng);
  return in;
}

}  // namespace gjsp
