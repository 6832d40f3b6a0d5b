#include "gjsp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "gjsp/error.hpp"
#include "gjsp/features.hpp"
#include "gjsp/gen/budget.hpp"
#include "gjsp/gen/grid.hpp"
#include "gjsp/harness/csv.hpp"
#include "gjsp/harness/dataset.hpp"
#include "gjsp/harness/export.hpp"
#include "gjsp/harness/matrix.hpp"
#include "gjsp/harness/selector.hpp"
#include "gjsp/harness/summary.hpp"
#include "gjsp/instance_io.hpp"
#include "gjsp/ml/evaluate.hpp"
#include "gjsp/ml/serialize.hpp"
#include "gjsp/ml/split.hpp"
#include "gjsp/solvers/solvers.hpp"

namespace gjsp {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> solver_names() {
  std::vector<std::string> names;
  for (SolverId s : kPortfolio) names.emplace_back(solver_tag(s));
  return names;
}

// "auto" or a positive number of milliseconds.
std::optional<std::int64_t> parse_budget(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  std::int64_t v = 0;
  try {
    v = parse_integer(text);
  } catch (const ParseError&) {
    throw UsageError("--budget expects milliseconds or 'auto', got '" + text + "'");
  }
  if (v <= 0) throw UsageError("--budget must be positive");
  return v;
}

ClockMode clock_option(const std::string& text) {
  try {
    return parse_clock_mode(text);
  } catch (const ParseError&) {
    throw UsageError("--clock expects wall or virtual");
  }
}

std::string outcome_line(const SolveOutcome& o) {
  std::ostringstream os;
  os << "solver=" << solver_tag(o.solver) << " status=" << to_string(o.status);
  if (o.objective) {
    os << " objective=" << format_real(o.objective->scalarized)
       << " makespan=" << o.objective->makespan << " energy=" << o.objective->energy
       << " tardiness=" << o.objective->tardiness;
  }
  os << " ms=" << o.solve_time_ms << " budget_ms=" << o.budget_ms << " seed=" << o.seed;
  return os.str();
}

void ensure_dir(const fs::path& dir) {
  if (!dir.empty()) fs::create_directories(dir);
}

void write_parent(const fs::path& file) { ensure_dir(file.parent_path()); }

std::string sweep_csv(const std::vector<ml::CvResult>& results) {
  std::ostringstream os;
  os << "rank,family,mean_accuracy,std_accuracy";
  const std::size_t k = results.empty() ? 0 : results.front().fold_accuracy.size();
  for (std::size_t f = 0; f < k; ++f) os << ",fold" << f + 1;
  os << '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    os << i + 1 << ',' << ml::family_name(r.spec.family) << ',' << format_real(r.mean) << ','
       << format_real(r.stddev);
    for (double a : r.fold_accuracy) os << ',' << format_real(a);
    os << '\n';
  }
  return os.str();
}

// Reads key=value lines and appends --key=value for every key the command
// line does not already set, so explicit flags win.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  std::ifstream in(*path);
  if (!in) throw UsageError("cannot open config file " + *path);
  auto given = [&](const std::string& key) {
    return std::any_of(rest.begin(), rest.end(), [&](const std::string& a) {
      return a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
    });
  };
  std::string line;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError("config line without '=': " + trim(line));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (given(key)) continue;
    if (value == "true") {
      extra.push_back("--" + key);
    } else if (value != "false") {
      extra.push_back("--" + key + "=" + value);
    }
  }
  rest.insert(rest.end(), extra.begin(), extra.end());
  return rest;
}

struct Options {
  std::string grid, out, instance, instances, solver = "all", budget = "auto", results, dataset,
      model, clock = "wall", solvers = "all";
  std::uint64_t master_seed = 0;
  bool master_seed_given = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::int64_t budget_cap = 0;
  int folds = 5;
  double test_fraction = 0.2;
  bool run = false;
};

int cmd_gen(const Options& o, std::ostream& out) {
  BenchmarkGrid grid = parse_grid(read_file(o.grid));
  if (o.master_seed_given) grid.master_seed = o.master_seed;
  ensure_dir(o.out);
  std::size_t n = 0;
  for (const GeneratorConfig& c : enumerate_grid(grid)) {
    const Instance inst = generate_instance(c);
    write_instance(fs::path(o.out) / (inst.id + ".json"), inst);
    ++n;
  }
  out << "master_seed=" << grid.master_seed << "\n";
  out << "instances=" << n << "\n";
  return kExitOk;
}

int cmd_budget(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance);
  require_valid(inst);
  std::int64_t b = allocate_budget(inst);
  if (o.budget_cap > 0) b = std::min(b, o.budget_cap);
  out << b << "\n";
  return kExitOk;
}

std::vector<SolverId> solver_list(const std::string& text) {
  if (text == "all") return {kPortfolio.begin(), kPortfolio.end()};
  std::vector<SolverId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_solver_tag(item));
    } catch (const ParseError&) {
      throw UsageError("unknown solver '" + item + "' (bnb, gls, sa, all)");
    }
  }
  if (out.empty()) throw UsageError("no solver given");
  return out;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance);
  require_valid(inst);
  const auto budget = parse_budget(o.budget);
  const ClockMode clock = clock_option(o.clock);
  out << "seed=" << o.seed << "\n";
  for (SolverId s : solver_list(o.solver)) {
    SolveOptions so;
    so.budget_ms = budget ? *budget : allocate_budget(inst);
    so.seed = pair_seed(inst, s, o.seed);
    so.clock = clock;
    out << outcome_line(solve(s, inst, so)) << "\n";
  }
  return kExitOk;
}

int cmd_batch(const Options& o, std::ostream& out) {
  MatrixOptions m;
  m.solvers = solver_list(o.solvers);
  m.parallelism = o.jobs;
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  m.budget_override = parse_budget(o.budget);
  if (o.budget_cap > 0) m.budget_cap = o.budget_cap;
  m.clock = clock_option(o.clock);
  m.seed = o.seed;
  m.journal = o.out + ".journal";
  const auto instances = load_instances(o.instances);
  write_parent(o.out);
  const auto rows = run_matrix(instances, m);
  write_results(o.out, rows);
  out << "seed=" << o.seed << "\n";
  out << "instances=" << rows.size() << "\n";
  out << "journal=" << m.journal.string() << "\n";
  return kExitOk;
}

int cmd_featurize(const Options& o, std::ostream& out) {
  const FeatureVector f = extract_features(read_instance(o.instance));
  const auto values = f.to_array();
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << feature_names()[i];
  out << "\n";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_real(values[i]);
  out << "\n";
  return kExitOk;
}

int cmd_dataset(const Options& o, std::ostream& out) {
  const auto results = read_results(o.results);
  const auto instances = load_instances(o.instances);
  const LabeledRows labeled = label_rows(results, instances);
  write_parent(o.out);
  write_dataset(o.out, labeled.rows);
  out << "rows=" << labeled.rows.size() << "\n";
  out << "dropped=" << labeled.dropped << "\n";
  return kExitOk;
}

int cmd_split(const Options& o, std::ostream& out) {
  const auto rows = read_dataset(o.dataset);
  std::vector<int> labels;
  for (const auto& r : rows) labels.push_back(static_cast<int>(r.label));
  const auto idx = ml::stratified_split(labels, o.test_fraction, o.seed);
  auto pick = [&](const std::vector<std::size_t>& which) {
    std::vector<DatasetRow> sel;
    for (std::size_t i : which) sel.push_back(rows[i]);
    return sel;
  };
  ensure_dir(o.out);
  write_dataset(fs::path(o.out) / "train.csv", pick(idx.train));
  write_dataset(fs::path(o.out) / "test.csv", pick(idx.test));
  out << "seed=" << o.seed << "\n";
  out << "train=" << idx.train.size() << "\ntest=" << idx.test.size() << "\n";
  return kExitOk;
}

int cmd_train(const Options& o, std::ostream& out) {
  const ml::LabeledDataset data = to_learning_set(read_dataset(o.dataset));
  out << "seed=" << o.seed << "\n";
  if (o.model == "sweep") {
    const auto ranked = ml::sweep(data, o.folds, o.seed, o.seed);
    ensure_dir(o.out);
    write_file(fs::path(o.out) / "sweep.csv", sweep_csv(ranked));
    const ml::TrainedModel best = ml::fit(ranked.front().spec, data);
    ml::write_model((fs::path(o.out) / "best_model.json").string(), best);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out << i + 1 << ' ' << ml::family_name(ranked[i].spec.family)
          << " mean=" << format_real(ranked[i].mean) << " std=" << format_real(ranked[i].stddev)
          << "\n";
    }
    return kExitOk;
  }
  ml::Family family;
  try {
    family = ml::parse_family(o.model);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const ml::TrainedModel m = ml::fit(ml::default_spec(family, o.seed), data);
  write_parent(o.out);
  ml::write_model(o.out, m);
  out << "family=" << ml::family_name(family) << "\nrows=" << data.size() << "\n";
  return kExitOk;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  const ml::TrainedModel m = ml::read_model(o.model);
  const ml::LabeledDataset test = to_learning_set(read_dataset(o.dataset));
  if (test.size() == 0) throw SchemaMismatch("test dataset has no rows");
  const ml::EvalReport r = ml::evaluate(m, test);
  ensure_dir(o.out);
  write_file(fs::path(o.out) / "confusion.csv", ml::confusion_csv(r, solver_names()));
  write_file(fs::path(o.out) / "summary.txt", ml::summary_text(r, solver_names()));
  out << "accuracy=" << format_real(r.accuracy) << "\n";
  out << "macro_precision=" << format_real(r.macro_precision) << "\n";
  out << "macro_recall=" << format_real(r.macro_recall) << "\n";
  return kExitOk;
}

int cmd_select(const Options& o, std::ostream& out) {
  const ml::TrainedModel m = ml::read_model(o.model);
  const Instance inst = read_instance(o.instance);
  require_valid(inst);
  SolveOptions base;
  base.clock = clock_option(o.clock);
  const auto budget = parse_budget(o.budget);
  const Recommendation rec = recommend(m, inst);
  base.seed = pair_seed(inst, rec.solver, o.seed);
  const Selection sel = select_and_solve(m, inst, budget, o.run, base);
  out << "seed=" << o.seed << "\n";
  out << "recommended=" << solver_tag(sel.recommendation.solver) << "\n";
  if (sel.outcome) out << outcome_line(*sel.outcome) << "\n";
  return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  const auto results = read_results(o.results);
  ensure_dir(o.out);
  write_file(fs::path(o.out) / "status_counts.csv", status_counts_csv(summarize_status(results)));
  write_file(fs::path(o.out) / "means_by_jm.csv", means_csv(summarize_means(results)));
  out << "rows=" << results.size() << "\n";
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Instance inst = read_instance(o.instance);
  require_valid(inst);
  write_parent(o.out);
  write_file(o.out, instance_to_dzn(inst));
  out << "wrote=" << o.out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gjsp: energy-aware job-shop benchmark, solver portfolio and selector", "gjsp"};
  app.require_subcommand(1, 1);
  app.add_option("--config", "key=value file; explicit flags take precedence");
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a benchmark grid of instances");
  gen->add_option("--grid", o.grid, "grid description file")->required();
  gen->add_option("--out", o.out, "output directory")->required();
  gen->add_option("--master-seed", o.master_seed, "override the grid's master seed");

  auto* budget = app.add_subcommand("budget", "Print the allocated time budget in ms");
  budget->add_option("--instance", o.instance)->required();
  budget->add_option("--budget-cap", o.budget_cap, "clamp in ms");

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--instance", o.instance)->required();
  solve->add_option("--solver", o.solver, "bnb, gls, sa or all");
  solve->add_option("--budget", o.budget, "ms or auto");
  solve->add_option("--seed", o.seed);
  solve->add_option("--clock", o.clock, "wall or virtual");

  auto* batch = app.add_subcommand("batch", "Solve every instance with every solver");
  batch->add_option("--instances", o.instances)->required();
  batch->add_option("--out", o.out, "results CSV")->required();
  batch->add_option("--jobs", o.jobs, "worker threads");
  batch->add_option("--budget-cap", o.budget_cap, "clamp allocated budgets, ms");
  batch->add_option("--budget", o.budget, "fixed budget in ms, or auto");
  batch->add_option("--seed", o.seed);
  batch->add_option("--clock", o.clock, "wall or virtual");
  batch->add_option("--solvers", o.solvers, "comma list or all");

  auto* featurize = app.add_subcommand("featurize", "Print the feature vector");
  featurize->add_option("--instance", o.instance)->required();

  auto* dataset = app.add_subcommand("dataset", "Label results into a training dataset");
  dataset->add_option("--results", o.results)->required();
  dataset->add_option("--instances", o.instances)->required();
  dataset->add_option("--out", o.out)->required();

  auto* split = app.add_subcommand("split", "Stratified train/test split of a dataset");
  split->add_option("--dataset", o.dataset)->required();
  split->add_option("--out", o.out, "directory for train.csv and test.csv")->required();
  split->add_option("--test-fraction", o.test_fraction);
  split->add_option("--seed", o.seed);

  auto* train = app.add_subcommand("train", "Train one model family, or sweep all seven");
  train->add_option("--dataset", o.dataset)->required();
  train->add_option("--model", o.model, "family name or sweep")->required();
  train->add_option("--out", o.out, "model file (directory for sweep)")->required();
  train->add_option("--seed", o.seed);
  train->add_option("--folds", o.folds, "cross-validation folds for sweep");

  auto* evaluate = app.add_subcommand("evaluate", "Confusion matrix and metrics on a dataset");
  evaluate->add_option("--model", o.model)->required();
  evaluate->add_option("--dataset", o.dataset)->required();
  evaluate->add_option("--out", o.out, "report directory")->required();

  auto* select = app.add_subcommand("select", "Recommend a solver for an instance");
  select->add_option("--model", o.model)->required();
  select->add_option("--instance", o.instance)->required();
  select->add_flag("--run", o.run, "also run the recommended solver");
  select->add_option("--budget", o.budget, "ms or auto");
  select->add_option("--seed", o.seed);
  select->add_option("--clock", o.clock, "wall or virtual");

  auto* report = app.add_subcommand("report", "Status counts and mean tables");
  report->add_option("--results", o.results)->required();
  report->add_option("--out", o.out, "directory")->required();

  auto* exp = app.add_subcommand("export", "Write an instance as MiniZinc data");
  exp->add_option("--instance", o.instance)->required();
  exp->add_option("--out", o.out, ".dzn file")->required();

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    o.master_seed_given = gen->count("--master-seed") > 0;
    if (*gen) return cmd_gen(o, out);
    if (*budget) return cmd_budget(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*batch) return cmd_batch(o, out);
    if (*featurize) return cmd_featurize(o, out);
    if (*dataset) return cmd_dataset(o, out);
    if (*split) return cmd_split(o, out);
    if (*train) return cmd_train(o, out);
    if (*evaluate) return cmd_evaluate(o, out);
    if (*select) return cmd_select(o, out);
    if (*report) return cmd_report(o, out);
    if (*exp) return cmd_export(o, out);
    return kExitUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace gjsp
