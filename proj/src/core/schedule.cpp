#include "gjsp/schedule.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gjsp/error.hpp"

namespace gjsp {

Time completion_of(const Instance& instance, const Schedule& schedule, int j, int t) {
  return schedule.start_of(j, t) + instance.proc(j, t, schedule.speed_of(j, t));
}

MachineOrders machine_orders_of(const Instance& instance, const Schedule& schedule) {
  MachineOrders orders(instance.n_machines);
  for (int j = 0; j < instance.n_jobs; ++j) {
    for (int t = 0; t < instance.n_machines; ++t) orders[instance.machine_of(j, t)].push_back(j);
  }
  for (int m = 0; m < instance.n_machines; ++m) {
    std::vector<int> task(instance.n_jobs);
    for (int j = 0; j < instance.n_jobs; ++j) {
      for (int t = 0; t < instance.n_machines; ++t) {
        if (instance.machine_of(j, t) == m) task[j] = t;
      }
    }
    std::stable_sort(orders[m].begin(), orders[m].end(), [&](int a, int b) {
      return schedule.start_of(a, task[a]) < schedule.start_of(b, task[b]);
    });
  }
  return orders;
}

SequenceDecoder::SequenceDecoder(const Instance& instance)
    : instance_(&instance),
      n_jobs_(instance.n_jobs),
      n_machines_(instance.n_machines),
      position_(static_cast<std::size_t>(instance.n_jobs) * instance.n_machines, -1),
      machine_pred_(position_.size()),
      machine_succ_(position_.size()),
      indegree_(position_.size()) {
  for (int j = 0; j < n_jobs_; ++j) {
    for (int t = 0; t < n_machines_; ++t) position_[j * n_machines_ + instance.routes[j][t]] = t;
  }
  queue_.reserve(position_.size());
}

bool SequenceDecoder::decode(const MachineOrders& orders, const std::vector<int>& speeds,
                             std::vector<Time>& starts) {
  const int M = n_machines_;
  const int n = n_jobs_ * M;
  std::fill(machine_pred_.begin(), machine_pred_.end(), -1);
  std::fill(machine_succ_.begin(), machine_succ_.end(), -1);
  for (int m = 0; m < M; ++m) {
    const auto& order = orders[m];
    for (std::size_t k = 1; k < order.size(); ++k) {
      int prev = order[k - 1] * M + position_[order[k - 1] * M + m];
      int cur = order[k] * M + position_[order[k] * M + m];
      machine_pred_[cur] = prev;
      machine_succ_[prev] = cur;
    }
  }
  queue_.clear();
  for (int op = 0; op < n; ++op) {
    indegree_[op] = (op % M != 0) + (machine_pred_[op] >= 0);
    if (indegree_[op] == 0) queue_.push_back(op);
  }
  starts.assign(n, 0);
  const Instance& in = *instance_;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    int op = queue_[head];
    int j = op / M;
    int t = op % M;
    Time s = in.release_of(j, t);
    if (t > 0) s = std::max(s, starts[op - 1] + in.proc(j, t - 1, speeds[op - 1]));
    int mp = machine_pred_[op];
    if (mp >= 0) s = std::max(s, starts[mp] + in.proc(mp / M, mp % M, speeds[mp]));
    starts[op] = s;
    if (t + 1 < M && --indegree_[op + 1] == 0) queue_.push_back(op + 1);
    int ms = machine_succ_[op];
    if (ms >= 0 && --indegree_[ms] == 0) queue_.push_back(ms);
  }
  return static_cast<int>(queue_.size()) == n;
}

Schedule decode_schedule(const Instance& instance, const MachineOrders& orders,
                         const std::vector<int>& speeds) {
  const int J = instance.n_jobs;
  const int M = instance.n_machines;
  if (static_cast<int>(orders.size()) != M) {
    throw std::invalid_argument("expected one order per machine");
  }
  for (const auto& order : orders) {
    std::vector<int> seen(J, 0);
    if (static_cast<int>(order.size()) != J) {
      throw std::invalid_argument("machine order must list every job once");
    }
    for (int j : order) {
      if (j < 0 || j >= J || seen[j]++) {
        throw std::invalid_argument("machine order is not a permutation of jobs");
      }
    }
  }
  if (static_cast<int>(speeds.size()) != J * M) {
    throw std::invalid_argument("expected one speed per task");
  }
  for (int s : speeds) {
    if (s < 0 || s >= instance.n_speeds) throw std::invalid_argument("speed index out of range");
  }
  SequenceDecoder decoder(instance);
  Schedule out(J, M);
  if (!decoder.decode(orders, speeds, out.start)) {
    throw CyclicPrecedence("route and machine orders form a cycle");
  }
  out.speed = speeds;
  return out;
}

std::vector<Violation> check_feasibility(const Instance& in, const Schedule& sched) {
  std::vector<Violation> out;
  const int J = in.n_jobs;
  const int M = in.n_machines;
  if (sched.n_jobs != J || sched.n_tasks != M ||
      static_cast<int>(sched.start.size()) != J * M ||
      static_cast<int>(sched.speed.size()) != J * M) {
    out.push_back({"shape", -1, -1, -1, "schedule does not match instance dimensions"});
    return out;
  }
  bool speeds_ok = true;
  for (int j = 0; j < J; ++j) {
    for (int t = 0; t < M; ++t) {
      int s = sched.speed_of(j, t);
      if (s < 0 || s >= in.n_speeds) {
        out.push_back({"speed_range", j, t, s, ""});
        speeds_ok = false;
      }
      if (sched.start_of(j, t) < 0) {
        out.push_back({"negative_start", j, t, -1, std::to_string(sched.start_of(j, t))});
      }
    }
  }
  if (!speeds_ok) return out;

  for (int j = 0; j < J; ++j) {
    for (int t = 0; t < M; ++t) {
      if (sched.start_of(j, t) < in.release_of(j, t)) {
        out.push_back({"release", j, t, -1,
                       "start " + std::to_string(sched.start_of(j, t)) + " < release " +
                           std::to_string(in.release_of(j, t))});
      }
      if (t > 0 && sched.start_of(j, t) < completion_of(in, sched, j, t - 1)) {
        out.push_back({"route_precedence", j, t, -1, "starts before task " + std::to_string(t - 1)});
      }
    }
  }

  // Per machine: sort by start and compare neighbours.
  std::vector<std::vector<std::pair<int, int>>> on_machine(M);
  for (int j = 0; j < J; ++j) {
    for (int t = 0; t < M; ++t) on_machine[in.machine_of(j, t)].push_back({j, t});
  }
  for (int m = 0; m < M; ++m) {
    auto& tasks = on_machine[m];
    std::sort(tasks.begin(), tasks.end(), [&](auto a, auto b) {
      return std::pair(sched.start_of(a.first, a.second), a.first) <
             std::pair(sched.start_of(b.first, b.second), b.first);
    });
    Time busy_until = std::numeric_limits<Time>::min();
    int busy_job = -1;
    for (auto [j, t] : tasks) {
      if (sched.start_of(j, t) < busy_until) {
        out.push_back({"machine_overlap", j, t, -1,
                       "overlaps job " + std::to_string(busy_job) + " on machine " +
                           std::to_string(m)});
      }
      Time c = completion_of(in, sched, j, t);
      if (c > busy_until) {
        busy_until = c;
        busy_job = j;
      }
    }
  }
  return out;
}

}  // namespace gjsp
