#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gjsp/gen/generator.hpp"

namespace oracle {

Instance make_instance(const std::vector<std::vector<int>>& routes,
                       const std::vector<std::vector<std::vector<std::int64_t>>>& proc,
                       const std::vector<std::vector<std::vector<std::int64_t>>>& energy) {
  Instance inst;
  inst.id = "hand";
  inst.n_jobs = static_cast<int>(routes.size());
  inst.n_machines = static_cast<int>(routes[0].size());
  inst.n_speeds = static_cast<int>(proc[0][0].size());
  inst.routes = routes;
  inst.proc = gjsp::Table3(inst.n_jobs, inst.n_machines, inst.n_speeds);
  inst.energy = gjsp::Table3(inst.n_jobs, inst.n_machines, inst.n_speeds);
  for (int j = 0; j < inst.n_jobs; ++j)
    for (int t = 0; t < inst.n_machines; ++t)
      for (int s = 0; s < inst.n_speeds; ++s) {
        inst.proc(j, t, s) = proc[j][t][s];
        inst.energy(j, t, s) = energy[j][t][s];
      }
  return inst;
}

Instance seeded(int jobs, int machines, int rddd, int speeds, std::uint64_t seed,
                gjsp::Distribution dist) {
  gjsp::GeneratorConfig c;
  c.n_jobs = jobs;
  c.n_machines = machines;
  c.rddd_level = rddd;
  c.n_speeds = speeds;
  c.distribution = dist;
  c.seed = seed;
  return gjsp::generate_instance(c);
}

namespace {

std::int64_t p(const Instance& i, int j, int t, int s) { return i.proc(j, t, s); }

std::int64_t release(const Instance& inst, int j, int t) {
  if (inst.rddd_level == gjsp::WindowLevel::Job) return t == 0 ? inst.job_windows[j].release : 0;
  if (inst.rddd_level == gjsp::WindowLevel::Operation) return inst.task_windows[j][t].release;
  return 0;
}

// Due date charged on (j, t), or -1.
std::int64_t due(const Instance& inst, int j, int t) {
  if (inst.rddd_level == gjsp::WindowLevel::Job) {
    return t == inst.n_machines - 1 ? inst.job_windows[j].due : -1;
  }
  if (inst.rddd_level == gjsp::WindowLevel::Operation) return inst.task_windows[j][t].due;
  return -1;
}

}  // namespace

Components components(const Instance& inst, const Schedule& s) {
  Components c;
  for (int j = 0; j < inst.n_jobs; ++j) {
    for (int t = 0; t < inst.n_machines; ++t) {
      const int sp = s.speed[j * inst.n_machines + t];
      const std::int64_t end = s.start[j * inst.n_machines + t] + p(inst, j, t, sp);
      c.makespan = std::max(c.makespan, end);
      c.energy += inst.energy(j, t, sp);
      const std::int64_t d = due(inst, j, t);
      if (d >= 0 && end > d) c.tardiness += end - d;
    }
  }
  return c;
}

double scalarized(const Instance& inst, const Components& c) {
  std::int64_t mk_ub = 0, en_ub = 0, en_lb = 0, mk_lb = 0;
  for (int j = 0; j < inst.n_jobs; ++j) {
    std::int64_t job_min = 0;
    for (int t = 0; t < inst.n_machines; ++t) {
      std::int64_t pmax = 0, pmin = std::numeric_limits<std::int64_t>::max();
      std::int64_t emax = 0, emin = std::numeric_limits<std::int64_t>::max();
      for (int s = 0; s < inst.n_speeds; ++s) {
        pmax = std::max(pmax, p(inst, j, t, s));
        pmin = std::min(pmin, p(inst, j, t, s));
        emax = std::max(emax, inst.energy(j, t, s));
        emin = std::min(emin, inst.energy(j, t, s));
      }
      mk_ub += pmax;
      job_min += pmin;
      en_ub += emax;
      en_lb += emin;
    }
    mk_lb = std::max(mk_lb, job_min);
  }
  double v = 0.0;
  if (mk_ub != mk_lb) v += double(c.makespan - mk_lb) / double(mk_ub - mk_lb);
  if (en_ub != en_lb) v += double(c.energy - en_lb) / double(en_ub - en_lb);
  if (mk_ub != 0) v += double(c.tardiness) / double(mk_ub);
  return v;
}

bool feasible(const Instance& inst, const Schedule& s) {
  const int J = inst.n_jobs, M = inst.n_machines;
  if (s.start.size() != std::size_t(J * M) || s.speed.size() != std::size_t(J * M)) return false;
  auto start = [&](int j, int t) { return s.start[j * M + t]; };
  auto end = [&](int j, int t) { return start(j, t) + p(inst, j, t, s.speed[j * M + t]); };
  for (int j = 0; j < J; ++j) {
    for (int t = 0; t < M; ++t) {
      const int sp = s.speed[j * M + t];
      if (sp < 0 || sp >= inst.n_speeds) return false;
      if (start(j, t) < 0 || start(j, t) < release(inst, j, t)) return false;
      if (t > 0 && start(j, t) < end(j, t - 1)) return false;
    }
  }
  for (int a = 0; a < J * M; ++a) {
    for (int b = a + 1; b < J * M; ++b) {
      const int ja = a / M, ta = a % M, jb = b / M, tb = b % M;
      if (inst.routes[ja][ta] != inst.routes[jb][tb]) continue;
      if (start(ja, ta) < end(jb, tb) && start(jb, tb) < end(ja, ta)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> decode(const Instance& inst, const std::vector<std::vector<int>>& orders,
                                 const std::vector<int>& speeds) {
  const int J = inst.n_jobs, M = inst.n_machines;
  std::vector<std::int64_t> st(J * M, 0);
  auto task_of = [&](int j, int m) {
    for (int t = 0; t < M; ++t)
      if (inst.routes[j][t] == m) return t;
    return -1;
  };
  // Longest-path relaxation; more than J*M rounds of change means a cycle.
  for (int round = 0; round <= J * M + 1; ++round) {
    bool changed = false;
    for (int j = 0; j < J; ++j) {
      for (int t = 0; t < M; ++t) {
        std::int64_t v = release(inst, j, t);
        if (t > 0) v = std::max(v, st[j * M + t - 1] + p(inst, j, t - 1, speeds[j * M + t - 1]));
        const int m = inst.routes[j][t];
        const auto& ord = orders[m];
        const auto pos = std::find(ord.begin(), ord.end(), j) - ord.begin();
        if (pos > 0) {
          const int pj = ord[pos - 1];
          const int pt = task_of(pj, m);
          v = std::max(v, st[pj * M + pt] + p(inst, pj, pt, speeds[pj * M + pt]));
        }
        if (v != st[j * M + t]) {
          st[j * M + t] = v;
          changed = true;
        }
      }
    }
    if (!changed) return st;
  }
  return {};
}

double optimum(const Instance& inst) {
  const int J = inst.n_jobs, M = inst.n_machines;
  std::vector<std::vector<int>> orders(M);
  for (auto& o : orders) {
    for (int j = 0; j < J; ++j) o.push_back(j);
  }
  double best = std::numeric_limits<double>::infinity();
  // Odometer over per-machine permutations.
  while (true) {
    std::vector<int> speeds(J * M, 0);
    while (true) {
      const auto st = decode(inst, orders, speeds);
      if (!st.empty()) {
        Schedule s(J, M);
        s.start = st;
        s.speed = speeds;
        best = std::min(best, scalarized(inst, components(inst, s)));
      }
      int k = 0;
      while (k < J * M && ++speeds[k] == inst.n_speeds) speeds[k++] = 0;
      if (k == J * M) break;
    }
    int m = 0;
    while (m < M && !std::next_permutation(orders[m].begin(), orders[m].end())) ++m;
    if (m == M) break;
  }
  return best;
}

gjsp::FeatureVector features(const Instance& inst) {
  gjsp::FeatureVector f;
  const int J = inst.n_jobs, M = inst.n_machines, S = inst.n_speeds;
  f.n_jobs = J;
  f.n_machines = M;
  f.rddd_level = static_cast<int>(inst.rddd_level);
  f.n_speeds = S;
  double psum = 0, esum = 0;
  f.p_max = -1e300;
  f.p_min = 1e300;
  f.e_max = -1e300;
  f.e_min = 1e300;
  for (int j = 0; j < J; ++j)
    for (int t = 0; t < M; ++t)
      for (int s = 0; s < S; ++s) {
        const double pv = double(inst.proc(j, t, s)), ev = double(inst.energy(j, t, s));
        f.p_max = std::max(f.p_max, pv);
        f.p_min = std::min(f.p_min, pv);
        f.e_max = std::max(f.e_max, ev);
        f.e_min = std::min(f.e_min, ev);
        psum += pv;
        esum += ev;
      }
  f.p_mean = psum / double(J * M * S);
  f.e_mean = esum / double(J * M * S);
  f.mk_ub = f.mk_lb = f.en_ub = f.en_lb = 0;
  for (int j = 0; j < J; ++j) {
    std::int64_t job_min = 0;
    for (int t = 0; t < M; ++t) {
      std::vector<std::int64_t> ps, es;
      for (int s = 0; s < S; ++s) {
        ps.push_back(inst.proc(j, t, s));
        es.push_back(inst.energy(j, t, s));
      }
      f.mk_ub += *std::max_element(ps.begin(), ps.end());
      job_min += *std::min_element(ps.begin(), ps.end());
      f.en_ub += *std::max_element(es.begin(), es.end());
      f.en_lb += *std::min_element(es.begin(), es.end());
    }
    f.mk_lb = std::max<std::int64_t>(f.mk_lb, job_min);
  }
  if (inst.rddd_level == gjsp::WindowLevel::None) {
    f.tt_ub = -1;
    f.time_window = -1;
    f.overlap = -1;
    return f;
  }
  f.tt_ub = f.mk_ub;
  if (inst.rddd_level == gjsp::WindowLevel::Job) {
    double tw = 0;
    for (int j = 0; j < J; ++j) {
      std::int64_t w = 0;
      for (int t = 0; t < M; ++t) w += inst.proc(j, t, 0);
      tw += double(inst.job_windows[j].due - inst.job_windows[j].release) / double(w);
    }
    f.time_window = tw / J;
    double ov = 0;
    for (int a = 0; a < J; ++a)
      for (int b = 0; b < J; ++b) {
        if (a == b) continue;
        const auto& wa = inst.job_windows[a];
        const auto& wb = inst.job_windows[b];
        const double inter = double(std::max<std::int64_t>(
            0, std::min(wa.due, wb.due) - std::max(wa.release, wb.release)));
        ov += inter / double(wa.due - wa.release);
      }
    f.overlap = J > 1 ? ov / double(J * (J - 1)) : 0.0;
    return f;
  }
  double tw = 0;
  for (int j = 0; j < J; ++j)
    for (int t = 0; t < M; ++t) {
      const auto& w = inst.task_windows[j][t];
      tw += double(w.due - w.release) / double(inst.proc(j, t, 0));
    }
  f.time_window = tw / double(J * M);
  double ov = 0;
  for (int m = 0; m < M; ++m)
    for (int a = 0; a < J; ++a)
      for (int b = 0; b < J; ++b) {
        if (a == b) continue;
        int ta = 0, tb = 0;
        for (int t = 0; t < M; ++t) {
          if (inst.routes[a][t] == m) ta = t;
          if (inst.routes[b][t] == m) tb = t;
        }
        const auto& wa = inst.task_windows[a][ta];
        const auto& wb = inst.task_windows[b][tb];
        const double inter = double(std::max<std::int64_t>(
            0, std::min(wa.due, wb.due) - std::max(wa.release, wb.release)));
        ov += inter / double(wa.due - wa.release);
      }
  f.overlap = J > 1 ? ov / double(J * (J - 1) * M) : 0.0;
  return f;
}

std::int64_t budget(int jobs, int machines, int rddd, int speeds) {
  auto term = [](const std::vector<int>& set, int v) {
    const auto it = std::find(set.begin(), set.end(), v);
    const double r = double(it - set.begin()) / double(set.size() - 1);
    return 50.0 * std::pow(1500.0, r);
  };
  const std::vector<int> jm = {5, 10, 20, 25, 50, 100};
  const double total = term(jm, jobs) + term(jm, machines) + term({0, 1, 2}, rddd) +
                       term({1, 3, 5}, speeds);
  return std::llround(std::min(total, 300000.0));
}

}  // namespace oracle
