#pragma once

#include <array>
#include <string_view>

#include "gjsp/instance.hpp"

namespace gjsp {

inline constexpr std::size_t kFeatureCount = 17;

// The instance descriptor fed to the selector. Sentinel fields are -1 when
// the instance has no release/due dates.
struct FeatureVector {
  int n_jobs = 0;
  int n_machines = 0;
  int rddd_level = 0;
  int n_speeds = 0;
  double p_max = 0, p_mean = 0, p_min = 0;
  double e_max = 0, e_mean = 0, e_min = 0;
  Time mk_ub = 0, mk_lb = 0;
  Energy en_ub = 0, en_lb = 0;
  Time tt_ub = -1;
  double time_window = -1;
  double overlap = -1;

  std::array<double, kFeatureCount> to_array() const;
  static FeatureVector from_array(const std::array<double, kFeatureCount>& values);
  bool operator==(const FeatureVector&) const = default;
};

// Column names in dataset order.
const std::array<std::string_view, kFeatureCount>& feature_names();

// Throws InvalidInstance when validate_instance reports violations.
FeatureVector extract_features(const Instance& instance);

// How many times each job (rddd 1) or operation (rddd 2) fits in its window,
// measured at the slowest speed; -1 without windows.
double time_window_feature(const Instance& instance);

// Mean pairwise window intersection over ordered job pairs, relative to the
// first job's window; at rddd 2 tasks are paired by machine. -1 without
// windows, 0 for a single job.
double overlap_feature(const Instance& instance);

}  // namespace gjsp
