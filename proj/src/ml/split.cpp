#include "gjsp/ml/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "gjsp/error.hpp"
#include "gjsp/gen/rng.hpp"

namespace gjsp::ml {
namespace {

// Row indices per class, each list shuffled with its own stream.
std::map<int, std::vector<std::size_t>> shuffled_classes(const std::vector<int>& labels,
                                                         std::uint64_t seed) {
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  for (auto& [label, rows] : by_class) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(static_cast<std::int64_t>(label))));
    rng.shuffle(rows);
  }
  return by_class;
}

}  // namespace

SplitIndices stratified_split(const std::vector<int>& labels, double test_fraction,
                              std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw std::invalid_argument("test fraction must lie in (0, 1)");
  }
  SplitIndices out;
  for (auto& [label, rows] : shuffled_classes(labels, seed)) {
    const auto count = static_cast<std::int64_t>(rows.size());
    if (count < 2) {
      throw ClassTooSmall("class " + std::to_string(label) + " has " + std::to_string(count) +
                          " row(s), need 2");
    }
    const std::int64_t n_test =
        std::clamp<std::int64_t>(std::llround(static_cast<double>(count) * test_fraction), 1,
                                 count - 1);
    out.test.insert(out.test.end(), rows.begin(), rows.begin() + n_test);
    out.train.insert(out.train.end(), rows.begin() + n_test, rows.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& data,
                                                           double test_fraction,
                                                           std::uint64_t seed) {
  const SplitIndices idx = stratified_split(data.y, test_fraction, seed);
  return {data.subset(idx.train), data.subset(idx.test)};
}

std::vector<SplitIndices> kfold(const std::vector<int>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  auto by_class = shuffled_classes(labels, seed);
  if (by_class.size() < 2) throw ClassTooSmall("need at least 2 distinct labels");
  std::vector<int> fold_of(labels.size(), 0);
  std::size_t cursor = 0;
  for (auto& [label, rows] : by_class) {
    if (static_cast<int>(rows.size()) < k) {
      throw ClassTooSmall("class " + std::to_string(label) + " has " +
                          std::to_string(rows.size()) + " row(s), fewer than " +
                          std::to_string(k) + " folds");
    }
    for (std::size_t r : rows) fold_of[r] = static_cast<int>(cursor++ % k);
  }
  std::vector<SplitIndices> folds(k);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int f = 0; f < k; ++f) (f == fold_of[i] ? folds[f].test : folds[f].train).push_back(i);
  }
  return folds;
}

}  // namespace gjsp::ml
