#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gjsp/ml/dataset.hpp"

namespace gjsp::ml {

struct SplitIndices {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

// Per class, a seeded shuffle then round(count * test_fraction) rows to the
// test side, clamped so both sides keep at least one row. Every class needs
// two rows (ClassTooSmall).
SplitIndices stratified_split(const std::vector<int>& labels, double test_fraction,
                              std::uint64_t seed);
std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& data,
                                                           double test_fraction,
                                                           std::uint64_t seed);

// k stratified folds; `test` of fold i is its validation part. Each class is
// dealt round-robin after a seeded shuffle, continuing where the previous
// class stopped so fold totals also differ by at most one.
std::vector<SplitIndices> kfold(const std::vector<int>& labels, int k, std::uint64_t seed);

}  // namespace gjsp::ml
