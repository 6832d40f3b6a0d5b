#include "gjsp/ml/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gjsp/error.hpp"

namespace gjsp::ml {

LabeledDataset LabeledDataset::subset(const std::vector<std::size_t>& rows) const {
  LabeledDataset out;
  out.x.reserve(rows.size());
  out.y.reserve(rows.size());
  for (std::size_t r : rows) {
    out.x.push_back(x.at(r));
    out.y.push_back(y.at(r));
  }
  return out;
}

std::vector<int> LabeledDataset::classes() const {
  std::vector<int> out(y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_dataset(const LabeledDataset& data, int min_classes) {
  if (data.size() == 0) throw ClassTooSmall("empty dataset");
  if (data.x.size() != data.y.size()) {
    throw DimensionMismatch("feature and label counts differ");
  }
  const std::size_t d = data.dim();
  if (d == 0) throw DimensionMismatch("rows have no features");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.x[i].size() != d) {
      throw DimensionMismatch("row " + std::to_string(i) + " has " +
                              std::to_string(data.x[i].size()) + " features, expected " +
                              std::to_string(d));
    }
    for (double v : data.x[i]) {
      if (!std::isfinite(v)) throw NonFiniteFeature("row " + std::to_string(i));
    }
  }
  if (static_cast<int>(data.classes().size()) < min_classes) {
    throw ClassTooSmall("need at least " + std::to_string(min_classes) + " distinct labels");
  }
}

Standardizer Standardizer::fit(const std::vector<Row>& rows) {
  Standardizer s;
  if (rows.empty()) return s;
  const std::size_t d = rows.front().size();
  const double n = static_cast<double>(rows.size());
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 0.0);
  for (const Row& r : rows)
    for (std::size_t c = 0; c < d; ++c) s.mean[c] += r[c];
  for (double& m : s.mean) m /= n;
  for (const Row& r : rows)
    for (std::size_t c = 0; c < d; ++c) s.scale[c] += (r[c] - s.mean[c]) * (r[c] - s.mean[c]);
  for (double& v : s.scale) {
    v = std::sqrt(v / n);
    if (!(v > 1e-12)) v = 0.0;
  }
  return s;
}

Row Standardizer::apply(const Row& row) const {
  Row out(row.size(), 0.0);
  for (std::size_t c = 0; c < row.size() && c < mean.size(); ++c) {
    out[c] = scale[c] == 0.0 ? 0.0 : (row[c] - mean[c]) / scale[c];
  }
  return out;
}

std::vector<Row> Standardizer::apply(const std::vector<Row>& rows) const {
  std::vector<Row> out;
  out.reserve(rows.size());
  for (const Row& r : rows) out.push_back(apply(r));
  return out;
}

}  // namespace gjsp::ml
