#include "gjsp/harness/dataset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gjsp/error.hpp"
#include "gjsp/harness/csv.hpp"
#include "gjsp/instance_io.hpp"

namespace gjsp {
namespace {

constexpr std::string_view kHeader =
    "id,n_jobs,n_machines,rddd,n_speeds,p_max,p_mean,p_min,e_max,e_mean,e_min,mk_ub,mk_lb,en_ub,"
    "en_lb,tt_ub,time_window,overlap,bnb_status,bnb_obj,bnb_ms,gls_status,gls_obj,gls_ms,sa_"
    "status,sa_obj,sa_ms,label";

}  // namespace

std::string_view dataset_header() { return kHeader; }

std::optional<SolverId> best_solver(const std::array<SolverEcho, 3>& echoes) {
  std::optional<SolverId> best;
  for (SolverId s : kPortfolio) {
    const SolverEcho& e = echoes[static_cast<int>(s)];
    if (!e.objective) continue;
    if (!best) {
      best = s;
      continue;
    }
    const SolverEcho& b = echoes[static_cast<int>(*best)];
    if (*e.objective < *b.objective ||
        (*e.objective == *b.objective && e.solve_time_ms < b.solve_time_ms)) {
      best = s;
    }
  }
  return best;
}

LabeledRows label_rows(const std::vector<ResultRow>& results,
                       const std::vector<Instance>& instances) {
  std::map<std::string, const Instance*> by_id;
  for (const Instance& i : instances) by_id[i.id] = &i;
  LabeledRows out;
  for (const ResultRow& r : results) {
    DatasetRow row;
    row.id = r.id;
    for (SolverId s : kPortfolio) {
      const SolverCell& c = r.cell(s);
      row.echoes[static_cast<int>(s)] = {c.status, c.objective, c.solve_time_ms};
    }
    const auto label = best_solver(row.echoes);
    if (!label) {
      ++out.dropped;
      continue;
    }
    const auto it = by_id.find(r.id);
    if (it == by_id.end()) throw InvalidInstance("no instance file for result row " + r.id);
    row.features = extract_features(*it->second);
    row.label = *label;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string dataset_to_csv(const std::vector<DatasetRow>& rows) {
  std::ostringstream os;
  os << kHeader << '\n';
  for (const DatasetRow& r : rows) {
    const FeatureVector& f = r.features;
    os << r.id << ',' << f.n_jobs << ',' << f.n_machines << ',' << f.rddd_level << ','
       << f.n_speeds << ',' << format_real(f.p_max) << ',' << format_real(f.p_mean) << ','
       << format_real(f.p_min) << ',' << format_real(f.e_max) << ',' << format_real(f.e_mean)
       << ',' << format_real(f.e_min) << ',' << f.mk_ub << ',' << f.mk_lb << ',' << f.en_ub << ','
       << f.en_lb << ',' << f.tt_ub << ',' << format_real(f.time_window) << ','
       << format_real(f.overlap);
    for (const SolverEcho& e : r.echoes) {
      os << ',' << to_string(e.status) << ',';
      if (e.objective) os << format_real(*e.objective);
      os << ',' << e.solve_time_ms;
    }
    os << ',' << solver_tag(r.label) << '\n';
  }
  return os.str();
}

std::vector<DatasetRow> dataset_from_csv(const std::string& text) {
  const auto table = parse_csv(text);
  if (table.empty()) throw SchemaMismatch("dataset file is empty");
  const auto expected = split_csv_line(kHeader);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < table.front().size(); ++i) {
    if (!col.emplace(table.front()[i], i).second) {
      throw SchemaMismatch("duplicate column '" + table.front()[i] + "'");
    }
  }
  for (const auto& [name, pos] : col) {
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      throw SchemaMismatch("unknown column '" + name + "'");
    }
  }
  for (const std::string& name : expected) {
    if (!col.count(name)) throw SchemaMismatch("missing column '" + name + "'");
  }

  std::vector<DatasetRow> rows;
  for (std::size_t line = 1; line < table.size(); ++line) {
    const auto& f = table[line];
    if (f.size() != expected.size()) {
      throw SchemaMismatch("dataset line " + std::to_string(line + 1) + " has " +
                           std::to_string(f.size()) + " fields");
    }
    auto at = [&](const char* name) -> const std::string& { return f[col.at(name)]; };
    auto integer = [&](const char* name) { return parse_integer(at(name)); };
    auto real = [&](const char* name) { return parse_real(at(name)); };
    DatasetRow r;
    r.id = at("id");
    FeatureVector& v = r.features;
    v.n_jobs = static_cast<int>(integer("n_jobs"));
    v.n_machines = static_cast<int>(integer("n_machines"));
    v.rddd_level = static_cast<int>(integer("rddd"));
    v.n_speeds = static_cast<int>(integer("n_speeds"));
    v.p_max = real("p_max");
    v.p_mean = real("p_mean");
    v.p_min = real("p_min");
    v.e_max = real("e_max");
    v.e_mean = real("e_mean");
    v.e_min = real("e_min");
    v.mk_ub = integer("mk_ub");
    v.mk_lb = integer("mk_lb");
    v.en_ub = integer("en_ub");
    v.en_lb = integer("en_lb");
    v.tt_ub = integer("tt_ub");
    v.time_window = real("time_window");
    v.overlap = real("overlap");
    for (SolverId s : kPortfolio) {
      const std::string tag(solver_tag(s));
      SolverEcho& e = r.echoes[static_cast<int>(s)];
      e.status = parse_status(f[col.at(tag + "_status")]);
      const std::string& obj = f[col.at(tag + "_obj")];
      if (!obj.empty()) e.objective = parse_real(obj);
      e.solve_time_ms = parse_integer(f[col.at(tag + "_ms")]);
    }
    r.label = parse_solver_tag(at("label"));
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_dataset(const std::filesystem::path& path, const std::vector<DatasetRow>& rows) {
  write_file(path, dataset_to_csv(rows));
}

std::vector<DatasetRow> read_dataset(const std::filesystem::path& path) {
  return dataset_from_csv(read_file(path));
}

ml::LabeledDataset to_learning_set(const std::vector<DatasetRow>& rows) {
  ml::LabeledDataset out;
  for (const DatasetRow& r : rows) {
    const auto a = r.features.to_array();
    out.x.emplace_back(a.begin(), a.end());
    out.y.push_back(static_cast<int>(r.label));
  }
  return out;
}

}  // namespace gjsp
