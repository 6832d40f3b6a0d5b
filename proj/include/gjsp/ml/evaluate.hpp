#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gjsp/ml/models.hpp"

namespace gjsp::ml {

struct EvalReport {
  std::vector<int> labels;                     // row/column order
  std::vector<std::vector<std::int64_t>> confusion;  // [true][predicted]
  double accuracy = 0.0;
  std::vector<double> precision;
  std::vector<double> recall;
  std::vector<bool> precision_defined;  // false when nothing was predicted as the class
  double macro_precision = 0.0;         // over classes present in the true labels
  double macro_recall = 0.0;
  std::int64_t total = 0;
};

EvalReport report_from_confusion(const std::vector<int>& labels,
                                 const std::vector<std::vector<std::int64_t>>& confusion);
// Label set is the union of both sides, ascending.
EvalReport report_from_predictions(const std::vector<int>& truth, const std::vector<int>& predicted);
EvalReport evaluate(const TrainedModel& model, const LabeledDataset& test);

struct CvResult {
  ModelSpec spec;
  std::vector<double> fold_accuracy;
  double mean = 0.0;
  double stddev = 0.0;  // population
};

CvResult cross_validate(const ModelSpec& spec, const LabeledDataset& train, int k,
                        std::uint64_t seed);

// All seven families on shared folds, best mean first (family order on ties).
std::vector<CvResult> sweep(const LabeledDataset& train, int k, std::uint64_t seed,
                            std::uint64_t model_seed);

// Confusion matrix CSV and key=value summary text. Labels print as numbers
// unless names (indexed by label value) are given.
std::string confusion_csv(const EvalReport& report, const std::vector<std::string>& names = {});
std::string summary_text(const EvalReport& report, const std::vector<std::string>& names = {});

}  // namespace gjsp::ml
