#pragma once

#include <cstddef>
#include <vector>

namespace gjsp::ml {

using Row = std::vector<double>;

// Feature rows with integer class labels (solver ids in the selector).
struct LabeledDataset {
  std::vector<Row> x;
  std::vector<int> y;

  std::size_t size() const { return y.size(); }
  std::size_t dim() const { return x.empty() ? 0 : x.front().size(); }
  LabeledDataset subset(const std::vector<std::size_t>& rows) const;
  // Distinct labels, ascending.
  std::vector<int> classes() const;
};

// Nonempty, rectangular, finite. With min_classes = 2 also rejects
// single-class data (ClassTooSmall).
void check_dataset(const LabeledDataset& data, int min_classes);

// Z-score transform fitted on training rows. Constant columns map to 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;  // 0 marks a constant column

  static Standardizer fit(const std::vector<Row>& rows);
  Row apply(const Row& row) const;
  std::vector<Row> apply(const std::vector<Row>& rows) const;
  bool operator==(const Standardizer&) const = default;
};

}  // namespace gjsp::ml
