#pragma once

#include <optional>
#include <vector>

#include "gjsp/instance.hpp"

namespace gjsp {

// Start time and speed choice for every task, stored flat at j * n_tasks + t.
struct Schedule {
  int n_jobs = 0;
  int n_tasks = 0;  // tasks per job (== n_machines)
  std::vector<Time> start;
  std::vector<int> speed;

  Schedule() = default;
  Schedule(int jobs, int tasks)
      : n_jobs(jobs), n_tasks(tasks),
        start(static_cast<std::size_t>(jobs) * tasks, 0),
        speed(static_cast<std::size_t>(jobs) * tasks, 0) {}

  std::size_t index(int j, int t) const { return static_cast<std::size_t>(j) * n_tasks + t; }
  Time start_of(int j, int t) const { return start[index(j, t)]; }
  int speed_of(int j, int t) const { return speed[index(j, t)]; }

  bool operator==(const Schedule&) const = default;
  auto operator<=>(const Schedule&) const = default;
};

Time completion_of(const Instance& instance, const Schedule& schedule, int j, int t);

// machine_orders[m] lists the jobs in their processing order on machine m.
using MachineOrders = std::vector<std::vector<int>>;

// Processing order on every machine induced by the start times.
MachineOrders machine_orders_of(const Instance& instance, const Schedule& schedule);

// Semi-active (earliest-start) timing of a sequencing decision. Buffers are
// reused across calls so solvers can decode in their inner loops.
class SequenceDecoder {
 public:
  explicit SequenceDecoder(const Instance& instance);

  // Returns false when the route + machine precedence graph has a cycle.
  // speeds is flat (j * n_machines + t); starts is resized and filled.
  bool decode(const MachineOrders& orders, const std::vector<int>& speeds,
              std::vector<Time>& starts);

  int task_on_machine(int j, int m) const { return position_[j * n_machines_ + m]; }

 private:
  const Instance* instance_;
  int n_jobs_;
  int n_machines_;
  std::vector<int> position_;  // [j * M + m] -> task index of job j on m
  std::vector<int> machine_pred_;
  std::vector<int> machine_succ_;
  std::vector<int> indegree_;
  std::vector<int> queue_;
};

// Throws CyclicPrecedence for cyclic sequencing decisions and
// std::invalid_argument for malformed orders/speeds.
Schedule decode_schedule(const Instance& instance, const MachineOrders& orders,
                         const std::vector<int>& speeds);

std::vector<Violation> check_feasibility(const Instance& instance, const Schedule& schedule);

}  // namespace gjsp
