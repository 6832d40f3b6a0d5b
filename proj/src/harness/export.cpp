#include "gjsp/harness/export.hpp"

#include <functional>
#include <sstream>

namespace gjsp {
namespace {

// [| a, b | c, d |] over jobs x tasks.
std::string matrix(const Instance& inst, const std::function<std::int64_t(int, int)>& cell) {
  std::ostringstream os;
  os << "[|";
  for (int j = 0; j < inst.n_jobs; ++j) {
    os << (j ? " |" : "");
    for (int t = 0; t < inst.n_machines; ++t) os << (t ? ", " : " ") << cell(j, t);
  }
  os << " |]";
  return os.str();
}

std::string table3(const Instance& inst, const Table3& table) {
  std::ostringstream os;
  os << "array3d(1.." << inst.n_jobs << ", 1.." << inst.n_machines << ", 1.." << inst.n_speeds
     << ", [";
  const auto& raw = table.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) os << (i ? ", " : "") << raw[i];
  os << "])";
  return os.str();
}

}  // namespace

std::string instance_to_dzn(const Instance& inst) {
  std::ostringstream os;
  os << "% " << inst.id << "\n";
  os << "% speed 1 is the slowest mode; due = -1 means no due date on that task\n";
  os << "n_jobs = " << inst.n_jobs << ";\n";
  os << "n_machines = " << inst.n_machines << ";\n";
  os << "n_speeds = " << inst.n_speeds << ";\n";
  os << "rddd = " << static_cast<int>(inst.rddd_level) << ";\n";
  os << "route = " << matrix(inst, [&](int j, int t) { return inst.routes[j][t] + 1; }) << ";\n";
  os << "proc = " << table3(inst, inst.proc) << ";\n";
  os << "energy = " << table3(inst, inst.energy) << ";\n";
  os << "release = " << matrix(inst, [&](int j, int t) { return inst.release_of(j, t); })
     << ";\n";
  os << "due = " << matrix(inst, [&](int j, int t) { return inst.due_of(j, t).value_or(-1); })
     << ";\n";
  return os.str();
}

}  // namespace gjsp
