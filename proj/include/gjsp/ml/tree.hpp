#pragma once

#include <cstddef>
#include <vector>

#include "gjsp/gen/rng.hpp"
#include "gjsp/ml/dataset.hpp"

namespace gjsp::ml {

// Internal nodes route x[feature] <= threshold to the left child. Leaves have
// feature -1 and carry class counts (classification) or one output value
// (regression).
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<double> value;

  bool operator==(const TreeNode&) const = default;
};

struct Tree {
  std::vector<TreeNode> nodes;

  const std::vector<double>& leaf(const Row& x) const;
  bool operator==(const Tree&) const = default;
};

struct TreeParams {
  int max_depth = 12;    // 0 means unlimited
  int min_split = 2;
  int max_features = 0;  // features tried per split, 0 means all
};

// CART with Gini impurity. y holds class indices in [0, n_classes). Features
// are scanned in index order, thresholds are midpoints, and the first best
// split wins. When max_features is below the dimension a fresh subset is drawn
// from rng at every node.
Tree fit_classification_tree(const std::vector<Row>& x, const std::vector<int>& y, int n_classes,
                             const std::vector<std::size_t>& rows, const TreeParams& params,
                             Rng* rng);

// Second-order regression tree for boosting: split gain
// G_L^2/(H_L+l) + G_R^2/(H_R+l) - G^2/(H+l), leaf value -G/(H+l).
Tree fit_gradient_tree(const std::vector<Row>& x, const std::vector<double>& grad,
                       const std::vector<double>& hess, const std::vector<std::size_t>& rows,
                       const TreeParams& params, double lambda);

// Index of the largest entry, first on ties.
int argmax(const std::vector<double>& scores);

}  // namespace gjsp::ml
