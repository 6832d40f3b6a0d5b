#include "gjsp/instance.hpp"

#include <algorithm>
#include <string>

#include "gjsp/error.hpp"

namespace gjsp {

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Normal: return "normal";
    case Distribution::Exponential: return "exponential";
  }
  return "uniform";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "normal") return Distribution::Normal;
  if (name == "exponential") return Distribution::Exponential;
  throw ParseError("unknown distribution '" + std::string(name) + "'");
}

WindowLevel window_level_from_int(int level) {
  if (level < 0 || level > 2) {
    throw ParseError("rddd level must be 0, 1 or 2, got " + std::to_string(level));
  }
  return static_cast<WindowLevel>(level);
}

Time Instance::release_of(int j, int t) const {
  switch (rddd_level) {
    case WindowLevel::None: return 0;
    case WindowLevel::Job: return t == 0 ? job_windows[j].release : 0;
    case WindowLevel::Operation: return task_windows[j][t].release;
  }
  return 0;
}

std::optional<Time> Instance::due_of(int j, int t) const {
  switch (rddd_level) {
    case WindowLevel::None: return std::nullopt;
    case WindowLevel::Job:
      if (t == n_machines - 1) return job_windows[j].due;
      return std::nullopt;
    case WindowLevel::Operation: return task_windows[j][t].due;
  }
  return std::nullopt;
}

Time Instance::min_proc(int j, int t) const {
  auto row = proc.speeds_of(j, t);
  return *std::min_element(row.begin(), row.end());
}

Time Instance::max_proc(int j, int t) const {
  auto row = proc.speeds_of(j, t);
  return *std::max_element(row.begin(), row.end());
}

Energy Instance::min_energy(int j, int t) const {
  auto row = energy.speeds_of(j, t);
  return *std::min_element(row.begin(), row.end());
}

Energy Instance::max_energy(int j, int t) const {
  auto row = energy.speeds_of(j, t);
  return *std::max_element(row.begin(), row.end());
}

std::string describe(const Violation& v) {
  std::string out = v.kind;
  if (v.job >= 0) out += " job=" + std::to_string(v.job);
  if (v.task >= 0) out += " task=" + std::to_string(v.task);
  if (v.speed >= 0) out += " speed=" + std::to_string(v.speed);
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

void require_valid(const Instance& instance) {
  auto violations = validate_instance(instance);
  if (!violations.empty()) {
    throw InvalidInstance("invalid instance '" + instance.id + "': " + describe(violations.front()) +
                          (violations.size() > 1
                               ? " (+" + std::to_string(violations.size() - 1) + " more)"
                               : ""));
  }
}

}  // namespace gjsp
