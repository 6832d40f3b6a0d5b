#include "gjsp/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gjsp/objective.hpp"

namespace gjsp {

std::array<double, kFeatureCount> FeatureVector::to_array() const {
  return {static_cast<double>(n_jobs),
          static_cast<double>(n_machines),
          static_cast<double>(rddd_level),
          static_cast<double>(n_speeds),
          p_max,
          p_mean,
          p_min,
          e_max,
          e_mean,
          e_min,
          static_cast<double>(mk_ub),
          static_cast<double>(mk_lb),
          static_cast<double>(en_ub),
          static_cast<double>(en_lb),
          static_cast<double>(tt_ub),
          time_window,
          overlap};
}

FeatureVector FeatureVector::from_array(const std::array<double, kFeatureCount>& v) {
  FeatureVector f;
  f.n_jobs = static_cast<int>(std::llround(v[0]));
  f.n_machines = static_cast<int>(std::llround(v[1]));
  f.rddd_level = static_cast<int>(std::llround(v[2]));
  f.n_speeds = static_cast<int>(std::llround(v[3]));
  f.p_max = v[4];
  f.p_mean = v[5];
  f.p_min = v[6];
  f.e_max = v[7];
  f.e_mean = v[8];
  f.e_min = v[9];
  f.mk_ub = std::llround(v[10]);
  f.mk_lb = std::llround(v[11]);
  f.en_ub = std::llround(v[12]);
  f.en_lb = std::llround(v[13]);
  f.tt_ub = std::llround(v[14]);
  f.time_window = v[15];
  f.overlap = v[16];
  return f;
}

const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names = {
      "n_jobs", "n_machines", "rddd", "n_speeds", "p_max",  "p_mean", "p_min",
      "e_max",  "e_mean",     "e_min", "mk_ub",   "mk_lb",  "en_ub",  "en_lb",
      "tt_ub",  "time_window", "overlap"};
  return names;
}

double time_window_feature(const Instance& in) {
  switch (in.rddd_level) {
    case WindowLevel::None: return -1.0;
    case WindowLevel::Job: {
      double sum = 0.0;
      for (int j = 0; j < in.n_jobs; ++j) {
        Time work = 0;
        for (int t = 0; t < in.n_machines; ++t) work += in.proc(j, t, 0);
        sum += static_cast<double>(in.job_windows[j].length()) / static_cast<double>(work);
      }
      return sum / in.n_jobs;
    }
    case WindowLevel::Operation: {
      double sum = 0.0;
      for (int j = 0; j < in.n_jobs; ++j) {
        for (int t = 0; t < in.n_machines; ++t) {
          sum += static_cast<double>(in.task_windows[j][t].length()) /
                 static_cast<double>(in.proc(j, t, 0));
        }
      }
      return sum / (static_cast<double>(in.n_jobs) * in.n_machines);
    }
  }
  return -1.0;
}

namespace {

double pair_overlap(const Window& a, const Window& b) {
  Time shared = std::max<Time>(0, std::min(a.due, b.due) - std::max(a.release, b.release));
  return static_cast<double>(shared) / static_cast<double>(a.length());
}

}  // namespace

double overlap_feature(const Instance& in) {
  if (in.rddd_level == WindowLevel::None) return -1.0;
  if (in.n_jobs < 2) return 0.0;
  const double pairs = static_cast<double>(in.n_jobs) * (in.n_jobs - 1);
  double sum = 0.0;
  if (in.rddd_level == WindowLevel::Job) {
    for (int a = 0; a < in.n_jobs; ++a) {
      for (int b = 0; b < in.n_jobs; ++b) {
        if (a != b) sum += pair_overlap(in.job_windows[a], in.job_windows[b]);
      }
    }
    return sum / pairs;
  }
  // task_on[j][m]: task index of job j on machine m
  std::vector<std::vector<int>> task_on(in.n_jobs, std::vector<int>(in.n_machines));
  for (int j = 0; j < in.n_jobs; ++j) {
    for (int t = 0; t < in.n_machines; ++t) task_on[j][in.machine_of(j, t)] = t;
  }
  for (int a = 0; a < in.n_jobs; ++a) {
    for (int b = 0; b < in.n_jobs; ++b) {
      if (a == b) continue;
      for (int m = 0; m < in.n_machines; ++m) {
        sum += pair_overlap(in.task_windows[a][task_on[a][m]], in.task_windows[b][task_on[b][m]]);
      }
    }
  }
  return sum / (pairs * in.n_machines);
}

FeatureVector extract_features(const Instance& in) {
  require_valid(in);
  FeatureVector f;
  f.n_jobs = in.n_jobs;
  f.n_machines = in.n_machines;
  f.rddd_level = static_cast<int>(in.rddd_level);
  f.n_speeds = in.n_speeds;

  auto summarize = [](const std::vector<std::int64_t>& values, double& mx, double& mean,
                      double& mn) {
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t total = 0;
    for (auto v : values) {
      hi = std::max(hi, v);
      lo = std::min(lo, v);
      total += v;
    }
    mx = static_cast<double>(hi);
    mn = static_cast<double>(lo);
    mean = static_cast<double>(total) / static_cast<double>(values.size());
  };
  summarize(in.proc.raw(), f.p_max, f.p_mean, f.p_min);
  summarize(in.energy.raw(), f.e_max, f.e_mean, f.e_min);

  const ObjectiveBounds b = objective_bounds(in);
  f.mk_ub = b.mk_ub;
  f.mk_lb = b.mk_lb;
  f.en_ub = b.en_ub;
  f.en_lb = b.en_lb;
  f.tt_ub = in.rddd_level == WindowLevel::None ? -1 : b.mk_ub;
  f.time_window = time_window_feature(in);
  f.overlap = overlap_feature(in);
  return f;
}

}  // namespace gjsp
