#include "gjsp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gjsp/error.hpp"

namespace gjsp {
namespace {

using nlohmann::json;

json table_to_json(const Table3& table) {
  json out = json::array();
  for (int j = 0; j < table.jobs(); ++j) {
    json row = json::array();
    for (int t = 0; t < table.tasks(); ++t) {
      auto speeds = table.speeds_of(j, t);
      row.push_back(json(std::vector<std::int64_t>(speeds.begin(), speeds.end())));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Table3 table_from_json(const json& doc, const char* key) {
  const json& data = doc.at(key);
  int jobs = static_cast<int>(data.size());
  int tasks = jobs > 0 ? static_cast<int>(data[0].size()) : 0;
  int speeds = tasks > 0 ? static_cast<int>(data[0][0].size()) : 0;
  Table3 table(jobs, tasks, speeds);
  for (int j = 0; j < jobs; ++j) {
    if (static_cast<int>(data[j].size()) != tasks) throw ParseError(std::string(key) + ": ragged");
    for (int t = 0; t < tasks; ++t) {
      if (static_cast<int>(data[j][t].size()) != speeds) {
        throw ParseError(std::string(key) + ": ragged");
      }
      for (int s = 0; s < speeds; ++s) table(j, t, s) = data[j][t][s].get<std::int64_t>();
    }
  }
  return table;
}

}  // namespace

std::string instance_to_text(const Instance& in) {
  json doc;
  doc["id"] = in.id;
  doc["n_jobs"] = in.n_jobs;
  doc["n_machines"] = in.n_machines;
  doc["n_speeds"] = in.n_speeds;
  doc["rddd_level"] = static_cast<int>(in.rddd_level);
  doc["distribution"] = std::string(to_string(in.distribution));
  doc["seed"] = in.seed;
  doc["routes"] = in.routes;
  doc["proc"] = table_to_json(in.proc);
  doc["energy"] = table_to_json(in.energy);
  switch (in.rddd_level) {
    case WindowLevel::None:
      doc["release"] = nullptr;
      doc["due"] = nullptr;
      break;
    case WindowLevel::Job: {
      json rel = json::array(), due = json::array();
      for (const auto& w : in.job_windows) {
        rel.push_back(w.release);
        due.push_back(w.due);
      }
      doc["release"] = rel;
      doc["due"] = due;
      break;
    }
    case WindowLevel::Operation: {
      json rel = json::array(), due = json::array();
      for (const auto& row : in.task_windows) {
        json r = json::array(), d = json::array();
        for (const auto& w : row) {
          r.push_back(w.release);
          d.push_back(w.due);
        }
        rel.push_back(r);
        due.push_back(d);
      }
      doc["release"] = rel;
      doc["due"] = due;
      break;
    }
  }
  // nlohmann::json keeps object keys sorted, which gives the canonical order.
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": " + value.dump();
  }
  out += "\n}\n";
  return out;
}

Instance instance_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  try {
    Instance in;
    in.id = doc.at("id").get<std::string>();
    in.n_jobs = doc.at("n_jobs").get<int>();
    in.n_machines = doc.at("n_machines").get<int>();
    in.n_speeds = doc.at("n_speeds").get<int>();
    in.rddd_level = window_level_from_int(doc.at("rddd_level").get<int>());
    in.distribution = parse_distribution(doc.at("distribution").get<std::string>());
    in.seed = doc.at("seed").get<std::uint64_t>();
    in.routes = doc.at("routes").get<std::vector<std::vector<int>>>();
    in.proc = table_from_json(doc, "proc");
    in.energy = table_from_json(doc, "energy");
    const json& rel = doc.at("release");
    const json& due = doc.at("due");
    switch (in.rddd_level) {
      case WindowLevel::None:
        if (!rel.is_null() || !due.is_null()) throw ParseError("rddd 0 requires null windows");
        break;
      case WindowLevel::Job: {
        auto r = rel.get<std::vector<Time>>();
        auto d = due.get<std::vector<Time>>();
        if (r.size() != d.size()) throw ParseError("release/due length mismatch");
        for (std::size_t j = 0; j < r.size(); ++j) in.job_windows.push_back({r[j], d[j]});
        break;
      }
      case WindowLevel::Operation: {
        auto r = rel.get<std::vector<std::vector<Time>>>();
        auto d = due.get<std::vector<std::vector<Time>>>();
        if (r.size() != d.size()) throw ParseError("release/due length mismatch");
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (r[j].size() != d[j].size()) throw ParseError("release/due length mismatch");
          std::vector<Window> row;
          for (std::size_t t = 0; t < r[j].size(); ++t) row.push_back({r[j][t], d[j][t]});
          in.task_windows.push_back(std::move(row));
        }
        break;
      }
    }
    return in;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
  write_file(path, instance_to_text(instance));
}

Instance read_instance(const std::filesystem::path& path) {
  return instance_from_text(read_file(path));
}

}  // namespace gjsp
