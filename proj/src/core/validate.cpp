#include <algorithm>
#include <string>
#include <tuple>

#include "gjsp/instance.hpp"

namespace gjsp {
namespace {

void check_window(const Window& w, Time min_work, int j, int t, std::vector<Violation>& out) {
  if (w.release < 0) {
    out.push_back({"window_negative_release", j, t, -1, "release " + std::to_string(w.release)});
  }
  if (w.due <= w.release) {
    out.push_back({"window_empty", j, t, -1,
                   "due " + std::to_string(w.due) + " <= release " + std::to_string(w.release)});
  } else if (w.length() < min_work) {
    out.push_back({"window_too_short", j, t, -1,
                   "length " + std::to_string(w.length()) + " < " + std::to_string(min_work)});
  }
}

}  // namespace

std::vector<Violation> validate_instance(const Instance& in) {
  std::vector<Violation> out;
  if (in.n_jobs <= 0 || in.n_machines <= 0 || in.n_speeds <= 0) {
    out.push_back({"dimension_nonpositive", -1, -1, -1,
                   std::to_string(in.n_jobs) + "x" + std::to_string(in.n_machines) + "x" +
                       std::to_string(in.n_speeds)});
    return out;
  }

  bool shapes_ok = true;
  if (static_cast<int>(in.routes.size()) != in.n_jobs) {
    out.push_back({"shape_routes", -1, -1, -1, "expected " + std::to_string(in.n_jobs) + " routes"});
    shapes_ok = false;
  }
  for (const auto* table : {&in.proc, &in.energy}) {
    if (table->jobs() != in.n_jobs || table->tasks() != in.n_machines ||
        table->speeds() != in.n_speeds) {
      out.push_back({table == &in.proc ? "shape_proc" : "shape_energy", -1, -1, -1,
                     "expected " + std::to_string(in.n_jobs) + "x" + std::to_string(in.n_machines) +
                         "x" + std::to_string(in.n_speeds)});
      shapes_ok = false;
    }
  }

  for (int j = 0; j < static_cast<int>(in.routes.size()); ++j) {
    const auto& route = in.routes[j];
    std::vector<int> seen(in.n_machines, 0);
    bool perm = static_cast<int>(route.size()) == in.n_machines;
    for (int m : route) {
      if (m < 0 || m >= in.n_machines || seen[m]++) perm = false;
    }
    if (!perm) out.push_back({"route_not_permutation", j, -1, -1, ""});
  }

  if (shapes_ok) {
    for (int j = 0; j < in.n_jobs; ++j) {
      for (int t = 0; t < in.n_machines; ++t) {
        for (int s = 0; s < in.n_speeds; ++s) {
          if (in.proc(j, t, s) < 1) {
            out.push_back({"proc_nonpositive", j, t, s, std::to_string(in.proc(j, t, s))});
          }
          if (in.energy(j, t, s) < 0) {
            out.push_back({"energy_negative", j, t, s, std::to_string(in.energy(j, t, s))});
          }
          if (s > 0 && (in.proc(j, t, s) > in.proc(j, t, s - 1) ||
                        in.energy(j, t, s) < in.energy(j, t, s - 1))) {
            out.push_back({"speed_monotonicity", j, t, s, ""});
          }
        }
      }
    }
  }

  switch (in.rddd_level) {
    case WindowLevel::None:
      if (!in.job_windows.empty() || !in.task_windows.empty()) {
        out.push_back({"window_unexpected", -1, -1, -1, "rddd 0 with windows"});
      }
      break;
    case WindowLevel::Job:
      if (static_cast<int>(in.job_windows.size()) != in.n_jobs || !in.task_windows.empty()) {
        out.push_back({"shape_windows", -1, -1, -1, "expected one window per job"});
      } else if (shapes_ok) {
        for (int j = 0; j < in.n_jobs; ++j) {
          Time work = 0;
          for (int t = 0; t < in.n_machines; ++t) work += in.min_proc(j, t);
          check_window(in.job_windows[j], work, j, -1, out);
        }
      }
      break;
    case WindowLevel::Operation: {
      bool ok = static_cast<int>(in.task_windows.size()) == in.n_jobs && in.job_windows.empty();
      for (const auto& row : in.task_windows) {
        ok = ok && static_cast<int>(row.size()) == in.n_machines;
      }
      if (!ok) {
        out.push_back({"shape_windows", -1, -1, -1, "expected one window per task"});
      } else if (shapes_ok) {
        for (int j = 0; j < in.n_jobs; ++j) {
          for (int t = 0; t < in.n_machines; ++t) {
            check_window(in.task_windows[j][t], in.min_proc(j, t), j, t, out);
          }
        }
      }
      break;
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.job, a.task, a.speed) < std::tie(b.kind, b.job, b.task, b.speed);
  });
  return out;
}

}  // namespace gjsp
