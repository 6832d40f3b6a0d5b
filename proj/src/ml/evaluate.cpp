#include "gjsp/ml/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gjsp/ml/split.hpp"

namespace gjsp::ml {
namespace {

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string label_name(int label, const std::vector<std::string>& names) {
  if (label >= 0 && static_cast<std::size_t>(label) < names.size()) return names[label];
  return std::to_string(label);
}

std::size_t position(const std::vector<int>& labels, int label) {
  return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) -
                                  labels.begin());
}

}  // namespace

EvalReport report_from_confusion(const std::vector<int>& labels,
                                 const std::vector<std::vector<std::int64_t>>& confusion) {
  const std::size_t k = labels.size();
  EvalReport r;
  r.labels = labels;
  r.confusion = confusion;
  r.precision.assign(k, 0.0);
  r.recall.assign(k, 0.0);
  r.precision_defined.assign(k, false);
  std::int64_t trace = 0;
  std::vector<std::int64_t> row(k, 0), col(k, 0);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t p = 0; p < k; ++p) {
      row[t] += confusion[t][p];
      col[p] += confusion[t][p];
      r.total += confusion[t][p];
    }
    trace += confusion[t][t];
  }
  r.accuracy = r.total > 0 ? static_cast<double>(trace) / static_cast<double>(r.total) : 0.0;
  int present = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const auto diag = static_cast<double>(confusion[c][c]);
    if (col[c] > 0) {
      r.precision[c] = diag / static_cast<double>(col[c]);
      r.precision_defined[c] = true;
    }
    if (row[c] > 0) {
      r.recall[c] = diag / static_cast<double>(row[c]);
      r.macro_precision += r.precision[c];
      r.macro_recall += r.recall[c];
      ++present;
    }
  }
  if (present > 0) {
    r.macro_precision /= present;
    r.macro_recall /= present;
  }
  return r;
}

EvalReport report_from_predictions(const std::vector<int>& truth,
                                   const std::vector<int>& predicted) {
  std::vector<int> labels(truth);
  labels.insert(labels.end(), predicted.begin(), predicted.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::vector<std::int64_t>> m(labels.size(),
                                           std::vector<std::int64_t>(labels.size(), 0));
  for (std::size_t i = 0; i < truth.size() && i < predicted.size(); ++i) {
    ++m[position(labels, truth[i])][position(labels, predicted[i])];
  }
  return report_from_confusion(labels, m);
}

EvalReport evaluate(const TrainedModel& model, const LabeledDataset& test) {
  return report_from_predictions(test.y, predict(model, test.x));
}

CvResult cross_validate(const ModelSpec& spec, const LabeledDataset& train, int k,
                        std::uint64_t seed) {
  check_dataset(train, 2);
  CvResult out;
  out.spec = spec;
  for (const SplitIndices& fold : kfold(train.y, k, seed)) {
    const TrainedModel m = fit(spec, train.subset(fold.train));
    out.fold_accuracy.push_back(evaluate(m, train.subset(fold.test)).accuracy);
  }
  for (double a : out.fold_accuracy) out.mean += a;
  out.mean /= static_cast<double>(out.fold_accuracy.size());
  for (double a : out.fold_accuracy) out.stddev += (a - out.mean) * (a - out.mean);
  out.stddev = std::sqrt(out.stddev / static_cast<double>(out.fold_accuracy.size()));
  return out;
}

std::vector<CvResult> sweep(const LabeledDataset& train, int k, std::uint64_t seed,
                            std::uint64_t model_seed) {
  std::vector<CvResult> out;
  for (Family f : kFamilies) out.push_back(cross_validate(default_spec(f, model_seed), train, k, seed));
  std::stable_sort(out.begin(), out.end(),
                   [](const CvResult& a, const CvResult& b) { return a.mean > b.mean; });
  return out;
}

std::string confusion_csv(const EvalReport& report, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "true\\predicted";
  for (int l : report.labels) os << ',' << label_name(l, names);
  os << '\n';
  for (std::size_t t = 0; t < report.labels.size(); ++t) {
    os << label_name(report.labels[t], names);
    for (std::int64_t c : report.confusion[t]) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

std::string summary_text(const EvalReport& report, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "total=" << report.total << '\n';
  os << "accuracy=" << real(report.accuracy) << '\n';
  os << "macro_precision=" << real(report.macro_precision) << '\n';
  os << "macro_recall=" << real(report.macro_recall) << '\n';
  for (std::size_t c = 0; c < report.labels.size(); ++c) {
    const std::string name = label_name(report.labels[c], names);
    os << "precision_" << name << '='
       << (report.precision_defined[c] ? real(report.precision[c]) : "undefined") << '\n';
    os << "recall_" << name << '=' << real(report.recall[c]) << '\n';
  }
  return os.str();
}

}  // namespace gjsp::ml
