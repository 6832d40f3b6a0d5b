#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gjsp {

using Time = std::int64_t;
using Energy = std::int64_t;

// Release/due-date granularity ("rddd" level).
enum class WindowLevel : int { None = 0, Job = 1, Operation = 2 };

enum class Distribution : int { Uniform = 0, Normal = 1, Exponential = 2 };

std::string_view to_string(Distribution d);
Distribution parse_distribution(std::string_view name);
WindowLevel window_level_from_int(int level);

struct Window {
  Time release = 0;
  Time due = 0;

  Time length() const { return due - release; }
  bool operator==(const Window&) const = default;
};

// Dense jobs x tasks x speeds table of integers.
class Table3 {
 public:
  Table3() = default;
  Table3(int jobs, int tasks, int speeds, std::int64_t fill = 0)
      : jobs_(jobs), tasks_(tasks), speeds_(speeds),
        data_(static_cast<std::size_t>(jobs) * tasks * speeds, fill) {}

  int jobs() const { return jobs_; }
  int tasks() const { return tasks_; }
  int speeds() const { return speeds_; }
  bool empty() const { return data_.empty(); }

  std::int64_t& operator()(int j, int t, int s) { return data_[index(j, t, s)]; }
  std::int64_t operator()(int j, int t, int s) const { return data_[index(j, t, s)]; }

  std::span<const std::int64_t> speeds_of(int j, int t) const {
    return {data_.data() + index(j, t, 0), static_cast<std::size_t>(speeds_)};
  }
  const std::vector<std::int64_t>& raw() const { return data_; }

  bool operator==(const Table3&) const = default;

 private:
  std::size_t index(int j, int t, int s) const {
    return (static_cast<std::size_t>(j) * tasks_ + t) * speeds_ + s;
  }

  int jobs_ = 0;
  int tasks_ = 0;
  int speeds_ = 0;
  std::vector<std::int64_t> data_;
};

// An energy-aware job-shop instance. Task t of job j is the t-th operation on
// the job's route and runs on machine routes[j][t]. Speed index 0 is the
// slowest (longest, cheapest) mode.
struct Instance {
  std::string id;
  int n_jobs = 0;
  int n_machines = 0;
  int n_speeds = 0;
  WindowLevel rddd_level = WindowLevel::None;
  Distribution distribution = Distribution::Uniform;
  std::uint64_t seed = 0;

  std::vector<std::vector<int>> routes;
  Table3 proc;    // time units, >= 1
  Table3 energy;  // energy units, >= 0

  std::vector<Window> job_windows;                // rddd = 1
  std::vector<std::vector<Window>> task_windows;  // rddd = 2, [job][task]

  int n_tasks() const { return n_jobs * n_machines; }
  int machine_of(int j, int t) const { return routes[j][t]; }

  // Earliest start of (j, t) imposed by release dates. At job level only the
  // first task carries the job's release date.
  Time release_of(int j, int t) const;
  // Due date charged for tardiness of (j, t), if any. At job level only the
  // last task on the route carries the job's due date.
  std::optional<Time> due_of(int j, int t) const;

  Time min_proc(int j, int t) const;
  Time max_proc(int j, int t) const;
  Energy min_energy(int j, int t) const;
  Energy max_energy(int j, int t) const;

  bool operator==(const Instance&) const = default;
};

struct Violation {
  std::string kind;
  int job = -1;
  int task = -1;
  int speed = -1;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

std::string describe(const Violation& v);

// Every violated structural invariant, ordered by (kind, job, task, speed).
std::vector<Violation> validate_instance(const Instance& instance);

// Throws InvalidInstance with the first violation when the instance is invalid.
void require_valid(const Instance& instance);

}  // namespace gjsp
