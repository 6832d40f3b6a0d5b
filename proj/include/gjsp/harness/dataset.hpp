#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gjsp/features.hpp"
#include "gjsp/harness/results.hpp"
#include "gjsp/ml/dataset.hpp"

namespace gjsp {

struct SolverEcho {
  SolveStatus status = SolveStatus::Unresolved;
  std::optional<double> objective;
  std::int64_t solve_time_ms = 0;

  bool operator==(const SolverEcho&) const = default;
};

struct DatasetRow {
  std::string id;
  FeatureVector features;
  std::array<SolverEcho, 3> echoes;  // indexed by SolverId
  SolverId label = SolverId::ExactBnB;

  bool operator==(const DatasetRow&) const = default;
};

struct LabeledRows {
  std::vector<DatasetRow> rows;
  std::size_t dropped = 0;  // rows where no solver found a schedule
};

// Best solver of one row: smallest objective, then smaller solve time, then
// portfolio order. Empty when every cell is Unresolved.
std::optional<SolverId> best_solver(const std::array<SolverEcho, 3>& echoes);

// Labels every result row; features come from the instance with the same id
// (InvalidInstance when missing).
LabeledRows label_rows(const std::vector<ResultRow>& results,
                       const std::vector<Instance>& instances);

std::string_view dataset_header();
std::string dataset_to_csv(const std::vector<DatasetRow>& rows);
std::vector<DatasetRow> dataset_from_csv(const std::string& text);  // SchemaMismatch, ParseError

void write_dataset(const std::filesystem::path& path, const std::vector<DatasetRow>& rows);
std::vector<DatasetRow> read_dataset(const std::filesystem::path& path);

// Features and labels (solver id as int) for the learners.
ml::LabeledDataset to_learning_set(const std::vector<DatasetRow>& rows);

}  // namespace gjsp
