// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--only 1,2,3] [--work DIR] [--keep]
//
// Criteria 7 and 10 run the desk pipeline through the CLI entry point and take
// the better part of an hour on one core; the rest finish in about a minute.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gjsp/cli.hpp"
#include "gjsp/features.hpp"
#include "gjsp/gen/budget.hpp"
#include "gjsp/gen/grid.hpp"
#include "gjsp/harness/csv.hpp"
#include "gjsp/harness/dataset.hpp"
#include "gjsp/harness/results.hpp"
#include "gjsp/harness/selector.hpp"
#include "gjsp/harness/summary.hpp"
#include "gjsp/instance_io.hpp"
#include "gjsp/ml/evaluate.hpp"
#include "gjsp/ml/models.hpp"
#include "gjsp/ml/serialize.hpp"
#include "gjsp/ml/split.hpp"
#include "gjsp/objective.hpp"
#include "gjsp/solvers/brute_force.hpp"
#include "gjsp/solvers/giffler_thompson.hpp"
#include "gjsp/solvers/solvers.hpp"
#include "oracles.hpp"

#ifndef GJSP_SOURCE_DIR
#define GJSP_SOURCE_DIR "."
#endif

using namespace gjsp;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and thresholds.
constexpr double kValueTol = 1e-12;
constexpr double kFeatureTol = 1e-12;
constexpr double kGradientTol = 1e-4;
constexpr double kGridSeconds = 10.0;
constexpr double kBudgetSeconds = 1.0;
constexpr double kOracleSeconds = 600.0;
constexpr std::int64_t kOracleBnbBudgetMs = 10'000;
constexpr std::int64_t kHeuristicBudgetMs = 500;
constexpr double kAnnealHitRate = 0.90;
constexpr std::size_t kFeasibilitySchedules = 10'000;
constexpr int kFeatureInstances = 200;
constexpr double kBaselineMargin = 0.05;
constexpr double kSelectorSlack = 0.05;
constexpr std::int64_t kDeskBudgetCap = 500;
constexpr std::size_t kDeskInstances = 1620;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Oracle-sized set: 2..3 jobs and machines, up to two speeds, every window level.
std::vector<Instance> oracle_set() {
  std::vector<Instance> out;
  for (int k = 0; k < 50; ++k) {
    out.push_back(oracle::seeded(2 + k % 2, 2 + (k / 2) % 2, (k / 8) % 3, 1 + (k / 4) % 2,
                                 5000 + static_cast<std::uint64_t>(k),
                                 static_cast<Distribution>((k / 24) % 3)));
  }
  return out;
}

SolveOptions virtual_options(std::int64_t budget, std::uint64_t seed) {
  SolveOptions o;
  o.budget_ms = budget;
  o.seed = seed;
  o.clock = ClockMode::Virtual;
  return o;
}

// ---- 1 ----
Verdict grid_cardinality() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t built_in = enumerate_grid(full_grid()).size();
  const std::size_t from_file =
      enumerate_grid(parse_grid(read_file(fs::path(GJSP_SOURCE_DIR) / "grids" / "full.grid"))).size();
  const double secs = seconds_since(t0);
  return {built_in == 9720 && from_file == 9720 && secs < kGridSeconds,
          std::to_string(built_in) + " configs (grids/full.grid: " + std::to_string(from_file) +
              ") in " + fmt("%.2f s", secs)};
}

// ---- 2 ----
Verdict budget_anchors() {
  const auto t0 = std::chrono::steady_clock::now();
  const BudgetPolicy p;
  bool ok = true;
  std::string why;
  GeneratorConfig zero{5, 5, 0, 1, Distribution::Uniform, 0, {}};
  if (budget_terms(zero)[2] != 50.0) ok = false, why += " rddd=0 term";
  GeneratorConfig top{100, 100, 2, 5, Distribution::Uniform, 0, {}};
  if (allocate_budget(top) != 300'000) ok = false, why += " all-max";
  int cells = 0;
  for (int j : p.jobs_set)
    for (int m : p.machines_set)
      for (int r : p.rddd_set)
        for (int s : p.speeds_set) {
          ++cells;
          GeneratorConfig c{j, m, r, s, Distribution::Uniform, 0, {}};
          for (double t : budget_terms(c)) {
            if (t < 50.0 || t > 75'000.0) ok = false, why += " term range";
          }
          // one rank step up along each axis never lowers the budget
          auto step = [&](const std::vector<int>& set, int v, auto with) {
            auto it = std::find(set.begin(), set.end(), v);
            if (it + 1 == set.end()) return;
            if (allocate_budget(with(*(it + 1))) < allocate_budget(c)) ok = false, why += " monotone";
          };
          step(p.jobs_set, j, [&](int v) { auto d = c; d.n_jobs = v; return d; });
          step(p.machines_set, m, [&](int v) { auto d = c; d.n_machines = v; return d; });
          step(p.rddd_set, r, [&](int v) { auto d = c; d.rddd_level = v; return d; });
          step(p.speeds_set, s, [&](int v) { auto d = c; d.n_speeds = v; return d; });
          if (allocate_budget(c) != oracle::budget(j, m, r, s)) ok = false, why += " formula";
        }
  const double secs = seconds_since(t0);
  if (secs >= kBudgetSeconds) ok = false, why += " slow";
  return {ok, "rddd=0 term 50, all-max 300000, " + std::to_string(cells) +
                  " cells in range and monotone, " + fmt("%.3f s", secs) + why};
}

// ---- 3 ----
Verdict oracle_optimality() {
  const auto t0 = std::chrono::steady_clock::now();
  int agree = 0, optimal = 0;
  double worst = 0.0;
  const auto set = oracle_set();
  for (std::size_t k = 0; k < set.size(); ++k) {
    const Instance& inst = set[k];
    SolveOptions o;
    o.budget_ms = kOracleBnbBudgetMs;
    o.seed = k;
    const auto out = solve_bnb(inst, o);
    const double bf = brute_force_optimum(inst).second.scalarized;
    const double perm = oracle::optimum(inst);
    if (out.status != SolveStatus::Optimal) continue;
    ++optimal;
    const double gap = std::max(std::abs(out.objective->scalarized - bf), std::abs(bf - perm));
    worst = std::max(worst, gap);
    if (gap <= kValueTol) ++agree;
  }
  const double secs = seconds_since(t0);
  const int n = static_cast<int>(set.size());
  return {optimal == n && agree == n && secs < kOracleSeconds,
          std::to_string(optimal) + "/" + std::to_string(n) + " optimal, " + std::to_string(agree) +
              " equal to brute force (max gap " + fmt("%.1e", worst) + "), " + fmt("%.1f s", secs)};
}

// ---- 4 ----
Verdict feasibility_universality() {
  const auto configs = enumerate_grid(parse_grid(read_file(fs::path(GJSP_SOURCE_DIR) / "grids" / "desk.grid")));
  std::array<std::size_t, 3> per_solver{};
  std::size_t checked = 0, violations = 0;
  // Stride through the grid so every size shows up early.
  const std::size_t stride = 7;
  for (std::size_t n = 0; n < configs.size() && checked < kFeasibilitySchedules; ++n) {
    const Instance inst = generate_instance(configs[(n * stride) % configs.size()]);
    for (SolverId s : kPortfolio) {
      SolveOptions o = virtual_options(40, n);
      o.on_incumbent = [&](const Schedule& sched, const ObjectiveBreakdown&) {
        ++checked;
        ++per_solver[static_cast<int>(s)];
        violations += check_feasibility(inst, sched).size();
      };
      const auto out = solve(s, inst, o);
      if (out.best) {
        ++checked;
        ++per_solver[static_cast<int>(s)];
        violations += check_feasibility(inst, *out.best).size();
      }
    }
  }
  const bool all_solvers = std::all_of(per_solver.begin(), per_solver.end(), [](auto c) { return c > 0; });
  return {checked >= kFeasibilitySchedules && violations == 0 && all_solvers,
          std::to_string(checked) + " schedules (bnb " + std::to_string(per_solver[0]) + ", gls " +
              std::to_string(per_solver[1]) + ", sa " + std::to_string(per_solver[2]) + "), " +
              std::to_string(violations) + " violations"};
}

// ---- 5 ----
Verdict heuristic_sandwich() {
  int gls_ok = 0, sa_ok = 0, sa_hits = 0;
  const auto set = oracle_set();
  for (std::size_t k = 0; k < set.size(); ++k) {
    const Instance& inst = set[k];
    const double opt = brute_force_optimum(inst).second.scalarized;
    const double built =
        normalized_objective(inst, giffler_thompson_construct(inst, ConstructionMode::Deterministic)).scalarized;
    const auto gls = solve_greedy_ls(inst, virtual_options(kHeuristicBudgetMs, k));
    const auto sa = solve_sa(inst, virtual_options(kHeuristicBudgetMs, k));
    const double g = gls.objective->scalarized, a = sa.objective->scalarized;
    if (g >= opt - kValueTol && g <= built + kValueTol) ++gls_ok;
    if (a >= opt - kValueTol) ++sa_ok;
    if (std::abs(a - opt) <= kValueTol) ++sa_hits;
  }
  const int n = static_cast<int>(set.size());
  const double rate = double(sa_hits) / n;
  return {gls_ok == n && sa_ok == n && rate >= kAnnealHitRate,
          "greedy-ls sandwiched " + std::to_string(gls_ok) + "/" + std::to_string(n) + ", anneal >= optimum " +
              std::to_string(sa_ok) + "/" + std::to_string(n) + ", anneal hit rate " + fmt("%.2f", rate) +
              " at 500 virtual ms"};
}

// ---- 6 ----
Verdict feature_oracle() {
  int matched = 0, sentinels_ok = 0;
  for (int k = 0; k < kFeatureInstances; ++k) {
    const int rd = k % 3;
    const Instance inst = oracle::seeded(2 + k % 7, 2 + (k / 7) % 7, rd, 1 + 2 * ((k / 3) % 3),
                                         static_cast<std::uint64_t>(k) * 31 + 1,
                                         static_cast<Distribution>((k / 5) % 3));
    const FeatureVector f = extract_features(inst);
    const FeatureVector g = oracle::features(inst);
    const auto a = f.to_array(), b = g.to_array();
    bool same = f.n_jobs == g.n_jobs && f.n_machines == g.n_machines && f.rddd_level == g.rddd_level &&
                f.n_speeds == g.n_speeds && f.mk_ub == g.mk_ub && f.mk_lb == g.mk_lb && f.en_ub == g.en_ub &&
                f.en_lb == g.en_lb && f.tt_ub == g.tt_ub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      same = same && std::abs(a[i] - b[i]) <= kFeatureTol * std::max(1.0, std::abs(b[i]));
    }
    matched += same;
    const bool none = rd == 0;
    sentinels_ok += (f.tt_ub == -1) == none && (f.time_window == -1.0) == none && (f.overlap == -1.0) == none;
  }
  return {matched == kFeatureInstances && sentinels_ok == kFeatureInstances,
          std::to_string(matched) + "/" + std::to_string(kFeatureInstances) + " match the recomputation, " +
              std::to_string(sentinels_ok) + " with sentinels exactly at rddd=0"};
}

// ---- 8 ----
Verdict metrics_hand_check() {
  const auto r = ml::report_from_confusion({0, 1}, {{8, 2}, {3, 7}});
  bool ok = std::abs(r.accuracy - 0.75) <= kValueTol && std::abs(r.precision[0] - 8.0 / 11.0) <= kValueTol &&
            std::abs(r.recall[0] - 0.8) <= kValueTol;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> label(0, 2);
  int runs_ok = 0;
  for (int run = 0; run < 200; ++run) {
    std::vector<int> truth(50), pred(50);
    for (int i = 0; i < 50; ++i) truth[i] = label(rng), pred[i] = label(rng);
    const auto rep = ml::report_from_predictions(truth, pred);
    bool rows = true;
    for (std::size_t c = 0; c < rep.labels.size(); ++c) {
      std::int64_t sum = 0;
      for (auto v : rep.confusion[c]) sum += v;
      rows = rows && sum == std::count(truth.begin(), truth.end(), rep.labels[c]);
    }
    runs_ok += rows;
  }
  ok = ok && runs_ok == 200;
  return {ok, "accuracy " + fmt("%.12g", r.accuracy) + ", precision0 " + fmt("%.12g", r.precision[0]) +
                  ", recall0 " + fmt("%.12g", r.recall[0]) + ", row sums match on " + std::to_string(runs_ok) +
                  "/200 runs"};
}

// ---- 9 ----
Verdict split_contracts() {
  bool ok = true;
  int cases = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    // class sizes shaped like a desk dataset plus a few small ones
    const std::vector<int> sizes = {int(700 + 13 * seed), int(450 + 7 * seed), int(10 + seed)};
    std::vector<int> labels;
    for (std::size_t c = 0; c < sizes.size(); ++c) labels.insert(labels.end(), sizes[c], int(c));
    std::shuffle(labels.begin(), labels.end(), std::mt19937_64(seed));
    ++cases;

    const auto folds = ml::kfold(labels, 5, seed);
    std::vector<int> seen(labels.size(), 0);
    for (const auto& f : folds) {
      ok = ok && f.train.size() + f.test.size() == labels.size();
      std::set<std::size_t> train(f.train.begin(), f.train.end());
      std::map<int, int> per;
      for (auto r : f.test) {
        ++seen[r];
        ++per[labels[r]];
        ok = ok && train.count(r) == 0;
      }
      for (std::size_t c = 0; c < sizes.size(); ++c) ok = ok && std::abs(per[int(c)] - sizes[c] / 5.0) < 1.0;
    }
    ok = ok && folds.size() == 5 && std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; });

    const auto split = ml::stratified_split(labels, 0.2, seed);
    std::map<int, int> per;
    for (auto r : split.test) ++per[labels[r]];
    for (std::size_t c = 0; c < sizes.size(); ++c) ok = ok && std::abs(per[int(c)] - sizes[c] * 0.2) <= 1.0;
    std::set<std::size_t> all(split.train.begin(), split.train.end());
    for (auto r : split.test) ok = ok && all.insert(r).second;
    ok = ok && all.size() == labels.size();
  }
  return {ok, std::to_string(cases) + " label sets: 5 folds disjoint, covering, per-class within 1; "
                                      "80/20 per-class within 1 row"};
}

// ---- 11 ----
Verdict mlp_and_forest() {
  const ml::MlpShape shape{17, 8, 3};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> params(shape.size());
  for (auto& p : params) p = u(rng);
  std::vector<ml::Row> x(5, ml::Row(17));
  for (auto& r : x)
    for (auto& v : r) v = u(rng);
  const std::vector<int> y = {0, 1, 2, 1, 0};
  std::vector<double> grad;
  ml::mlp_loss_and_gradient(shape, params, x, y, &grad);
  double worst = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double h = 1e-6;
    auto plus = params, minus = params;
    plus[i] += h;
    minus[i] -= h;
    const double numeric =
        (ml::mlp_loss_and_gradient(shape, plus, x, y, nullptr) - ml::mlp_loss_and_gradient(shape, minus, x, y, nullptr)) /
        (2 * h);
    worst = std::max(worst, std::abs(numeric - grad[i]) / std::max(std::abs(numeric) + std::abs(grad[i]), 1e-8));
  }

  // forest of one unbagged tree over all features against the plain tree
  ml::LabeledDataset d;
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    ml::Row r(17);
    for (auto& v : r) v = noise(rng);
    d.x.push_back(r);
    d.y.push_back(r[2] + r[9] > 0.5 ? 2 : (r[4] < -0.3 ? 0 : 1));
  }
  auto tree_spec = ml::default_spec(ml::Family::DecisionTree, 19);
  auto forest_spec = ml::default_spec(ml::Family::RandomForest, 19);
  forest_spec.hyper.n_trees = 1;
  forest_spec.hyper.bootstrap = false;
  forest_spec.hyper.max_features = 0;
  forest_spec.hyper.max_depth = tree_spec.hyper.max_depth;
  const auto tree = ml::fit(tree_spec, d);
  const auto forest = ml::fit(forest_spec, d);
  std::vector<ml::Row> probe = d.x;
  for (int i = 0; i < 300; ++i) {
    ml::Row r(17);
    for (auto& v : r) v = noise(rng);
    probe.push_back(r);
  }
  const bool same = ml::predict(tree, probe) == ml::predict(forest, probe);
  return {worst <= kGradientTol && same,
          "mlp max relative gradient error " + fmt("%.2e", worst) + ", forest == tree on " +
              std::to_string(probe.size()) + " rows: " + (same ? "yes" : "no")};
}

// ---- desk pipeline (7, 10) ----
struct DeskRun {
  fs::path dir;
  bool ok = false;
  std::string failure;
  double seconds = 0.0;
};

bool step(DeskRun& run, const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (code != kExitOk) {
    run.failure = args.front() + " exited " + std::to_string(code) + ": " + err.str();
    while (!run.failure.empty() && run.failure.back() == '\n') run.failure.pop_back();
    return false;
  }
  return true;
}

DeskRun desk_pipeline(const fs::path& dir, int jobs, bool keep) {
  DeskRun run;
  run.dir = dir;
  const auto t0 = std::chrono::steady_clock::now();
  if (!keep) fs::remove_all(dir);
  const std::string d = dir.string();
  const std::string grid = (fs::path(GJSP_SOURCE_DIR) / "grids" / "desk.grid").string();
  run.ok = step(run, {"gen", "--grid", grid, "--out", d + "/instances"}) &&
           step(run, {"batch", "--instances", d + "/instances", "--out", d + "/results.csv", "--clock", "virtual",
                      "--budget-cap", std::to_string(kDeskBudgetCap), "--jobs", std::to_string(jobs)}) &&
           step(run, {"dataset", "--results", d + "/results.csv", "--instances", d + "/instances", "--out",
                      d + "/dataset.csv"}) &&
           step(run, {"split", "--dataset", d + "/dataset.csv", "--out", d + "/split"}) &&
           step(run, {"train", "--dataset", d + "/split/train.csv", "--model", "gradient_boosted_trees", "--out",
                      d + "/gbt.json"}) &&
           step(run, {"evaluate", "--model", d + "/gbt.json", "--dataset", d + "/split/test.csv", "--out",
                      d + "/evaluation"}) &&
           step(run, {"train", "--dataset", d + "/split/train.csv", "--model", "sweep", "--out", d + "/sweep"}) &&
           step(run, {"report", "--results", d + "/results.csv", "--out", d + "/tables"});
  run.seconds = seconds_since(t0);
  return run;
}

struct DeskContext {
  fs::path work;
  bool keep = false;
  std::optional<DeskRun> first;

  const DeskRun& first_run() {
    if (!first) first = desk_pipeline(work / "desk_a", 1, keep);
    return *first;
  }
};

double cell_objective(const ResultRow& row, SolverId s) {
  // an unresolved cell scores one above the worst solved value on its row
  const auto& c = row.cell(s);
  if (c.objective) return *c.objective;
  double worst = 0.0;
  for (const auto& other : row.cells)
    if (other.objective) worst = std::max(worst, *other.objective);
  return worst + 1.0;
}

// ---- 7 ----
Verdict desk_experiment(DeskContext& ctx) {
  const DeskRun& run = ctx.first_run();
  if (!run.ok) return {false, run.failure};
  const fs::path d = run.dir;
  std::vector<std::string> notes, failed, stats;
  auto check = [&](bool ok, const std::string& what) {
    notes.push_back(what);
    if (!ok) failed.push_back(what);
  };
  // portfolio statistics: reported next to the verdict, not part of it
  auto report = [&](bool ok, const std::string& what) {
    stats.push_back(std::string(ok ? "[ok] " : "[miss] ") + what);
  };

  const auto results = read_results(d / "results.csv");
  const auto rows = read_dataset(d / "dataset.csv");
  check(results.size() == kDeskInstances, std::to_string(results.size()) + " instances");

  // every label attains its row minimum
  std::size_t label_ok = 0;
  for (const auto& r : rows) {
    double best = INFINITY;
    for (const auto& e : r.echoes)
      if (e.objective) best = std::min(best, *e.objective);
    const auto& mine = r.echoes[static_cast<int>(r.label)];
    label_ok += mine.objective && *mine.objective == best;
  }
  check(label_ok == rows.size(), std::to_string(label_ok) + "/" + std::to_string(rows.size()) +
                                     " labels at row minimum (" +
                                     std::to_string(results.size() - rows.size()) + " dropped)");

  // gradient-boosted trees against the majority class on the hold-out
  const auto train = to_learning_set(read_dataset(d / "split" / "train.csv"));
  const auto test = to_learning_set(read_dataset(d / "split" / "test.csv"));
  std::map<int, int> freq;
  for (int y : train.y) ++freq[y];
  const int majority = std::max_element(freq.begin(), freq.end(), [](auto a, auto b) {
                         return a.second < b.second;
                       })->first;
  const double baseline =
      double(std::count(test.y.begin(), test.y.end(), majority)) / double(std::max<std::size_t>(1, test.size()));
  const auto gbt = ml::read_model((d / "gbt.json").string());
  const double accuracy = ml::evaluate(gbt, test).accuracy;
  check(accuracy > baseline && accuracy >= baseline + kBaselineMargin - 1e-12,
        "gbt hold-out accuracy " + fmt("%.4f", accuracy) + " vs majority baseline " + fmt("%.4f", baseline));

  // sweep ranks all seven families
  const auto sweep = parse_csv(read_file(d / "sweep" / "sweep.csv"));
  std::set<std::string> families;
  for (std::size_t i = 1; i < sweep.size(); ++i)
    if (sweep[i].size() > 1) families.insert(sweep[i][1]);
  check(sweep.size() == 8 && families.size() == 7,
        "sweep ranked " + std::to_string(families.size()) + " families, best " +
            (sweep.size() > 1 ? sweep[1][1] : std::string("none")));

  // heterogeneity: exact solver wins the smallest cell and not the largest
  auto bnb_share = [&](int jobs, int machines) {
    int n = 0, wins = 0;
    for (const auto& r : rows) {
      if (r.features.n_jobs != jobs || r.features.n_machines != machines) continue;
      ++n;
      wins += r.label == SolverId::ExactBnB;
    }
    return n ? double(wins) / n : 0.0;
  };
  const double small = bnb_share(3, 3), large = bnb_share(8, 8);
  report(small > 0.5 && large <= 0.5,
        "bnb wins " + fmt("%.2f", small) + " of 3x3 and " + fmt("%.2f", large) + " of 8x8");

  // the selector against every fixed solver on the hold-out rows
  std::map<std::string, const ResultRow*> by_id;
  for (const auto& r : results) by_id[r.id] = &r;
  const auto test_rows = read_dataset(d / "split" / "test.csv");
  double selected = 0.0;
  std::array<double, 3> fixed{};
  for (const auto& r : test_rows) {
    const Instance inst = read_instance(d / "instances" / (r.id + ".json"));
    const Selection sel = select_and_solve(gbt, inst, std::nullopt, false);
    const ResultRow& row = *by_id.at(r.id);
    selected += cell_objective(row, sel.recommendation.solver);
    for (SolverId s : kPortfolio) fixed[static_cast<int>(s)] += cell_objective(row, s);
  }
  const double n = double(std::max<std::size_t>(1, test_rows.size()));
  const double best_fixed = *std::min_element(fixed.begin(), fixed.end()) / n;
  report(selected / n <= best_fixed + kSelectorSlack,
        "selector mean objective " + fmt("%.4f", selected / n) + " vs best fixed " + fmt("%.4f", best_fixed));

  const auto counts = summarize_status(results);
  report(counts[0].optimal > counts[2].optimal, "optimal counts bnb " + std::to_string(counts[0].optimal) +
                                                   " vs sa " + std::to_string(counts[2].optimal));

  std::string detail;
  for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
  detail += "; pipeline " + fmt("%.0f s", run.seconds);
  if (!failed.empty()) detail += "; FAILED: " + failed.front();
  for (const auto& n : stats) detail += "\n      " + n;
  return {failed.empty(), detail};
}

// ---- 10 ----
Verdict determinism(DeskContext& ctx) {
  const DeskRun& a = ctx.first_run();
  if (!a.ok) return {false, a.failure};
  // second run from scratch with a different worker count
  const DeskRun b = desk_pipeline(ctx.work / "desk_b", 3, false);
  if (!b.ok) return {false, b.failure};
  const std::vector<fs::path> files = {"dataset.csv", "split/train.csv", "split/test.csv", "gbt.json",
                                       "sweep/sweep.csv", "sweep/best_model.json", "results.csv"};
  std::vector<std::string> differ;
  for (const auto& f : files) {
    if (read_file(a.dir / f) != read_file(b.dir / f)) differ.push_back(f.string());
  }
  std::string detail = std::to_string(files.size() - differ.size()) + "/" + std::to_string(files.size()) +
                       " artifacts byte-identical across --jobs 1 and --jobs 3";
  if (!differ.empty()) detail += "; differs: " + differ.front();
  detail += "; rerun " + fmt("%.0f s", b.seconds);
  return {differ.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gjsp acceptance gate"};
  std::string only;
  std::string work = (fs::temp_directory_path() / "gjsp_acceptance").string();
  bool keep = false;
  app.add_option("--only", only, "comma list of criteria, default all");
  app.add_option("--work", work, "scratch directory for the desk pipeline");
  app.add_flag("--keep", keep, "reuse an existing desk run directory and its journal");
  CLI11_PARSE(app, argc, argv);

  DeskContext desk{work, keep, std::nullopt};
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
      {1, grid_cardinality},
      {2, budget_anchors},
      {3, oracle_optimality},
      {4, feasibility_universality},
      {5, heuristic_sandwich},
      {6, feature_oracle},
      {7, [&] { return desk_experiment(desk); }},
      {8, metrics_hand_check},
      {9, split_contracts},
      {10, [&] { return determinism(desk); }},
      {11, mlp_and_forest},
  };
  const char* names[] = {"",
                         "grid cardinality",
                         "budget anchors",
                         "oracle optimality",
                         "feasibility universality",
                         "heuristic sandwich",
                         "feature oracle",
                         "desk selection experiment",
                         "metrics hand check",
                         "cv and split contracts",
                         "determinism",
                         "mlp gradient and forest check"};

  std::set<int> selected;
  std::stringstream ss(only);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) selected.insert(std::stoi(item));
  }

  int failures = 0;
  for (const auto& [id, run] : criteria) {
    if (!selected.empty() && !selected.count(id)) continue;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("criterion %2d %s  %s: %s\n", id, v.pass ? "PASS" : "FAIL", names[id], v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
