#include "gjsp/ml/tree.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace gjsp::ml {
namespace {

constexpr double kGainTolerance = 1e-12;

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double score = 0.0;
};

double midpoint(double a, double b) {
  const double m = a + (b - a) / 2.0;
  return m < b ? m : a;
}

std::vector<int> features_for_node(std::size_t dim, int max_features, Rng* rng) {
  std::vector<int> features(dim);
  std::iota(features.begin(), features.end(), 0);
  if (max_features <= 0 || static_cast<std::size_t>(max_features) >= dim || rng == nullptr) {
    return features;
  }
  for (int i = 0; i < max_features; ++i) {
    const auto k = rng->uniform_int(i, static_cast<std::int64_t>(dim) - 1);
    std::swap(features[i], features[static_cast<std::size_t>(k)]);
  }
  features.resize(max_features);
  std::sort(features.begin(), features.end());
  return features;
}

// Sorts rows by one feature; ties keep row order.
void sort_by_feature(const std::vector<Row>& x, int f, std::vector<std::size_t>& rows) {
  std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
    return x[a][f] < x[b][f] || (x[a][f] == x[b][f] && a < b);
  });
}

// Shared recursion; Policy supplies leaf values and the best split of a node.
template <typename Policy>
class Builder {
 public:
  Builder(const std::vector<Row>& x, const TreeParams& params, Policy& policy)
      : x_(x), params_(params), policy_(policy) {}

  Tree build(std::vector<std::size_t> rows) {
    grow(std::move(rows), 0);
    return std::move(tree_);
  }

 private:
  int grow(std::vector<std::size_t> rows, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    tree_.nodes[id].value = policy_.leaf_value(rows);
    const bool depth_left = params_.max_depth <= 0 || depth < params_.max_depth;
    if (!depth_left || static_cast<int>(rows.size()) < params_.min_split || policy_.pure(rows)) {
      return id;
    }
    const Split split = policy_.best_split(x_, rows);
    if (split.feature < 0) return id;
    std::vector<std::size_t> left, right;
    for (std::size_t r : rows) {
      (x_[r][split.feature] <= split.threshold ? left : right).push_back(r);
    }
    if (left.empty() || right.empty()) return id;
    rows.clear();
    rows.shrink_to_fit();
    const int l = grow(std::move(left), depth + 1);
    const int r = grow(std::move(right), depth + 1);
    TreeNode& node = tree_.nodes[id];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    node.value.clear();
    return id;
  }

  const std::vector<Row>& x_;
  const TreeParams& params_;
  Policy& policy_;
  Tree tree_;
};

class GiniPolicy {
 public:
  GiniPolicy(const std::vector<int>& y, int n_classes, int max_features, Rng* rng)
      : y_(y), n_classes_(n_classes), max_features_(max_features), rng_(rng) {}

  std::vector<double> leaf_value(const std::vector<std::size_t>& rows) const {
    std::vector<double> counts(n_classes_, 0.0);
    for (std::size_t r : rows) counts[y_[r]] += 1.0;
    return counts;
  }

  bool pure(const std::vector<std::size_t>& rows) const {
    for (std::size_t r : rows)
      if (y_[r] != y_[rows.front()]) return false;
    return true;
  }

  // Maximizes sum_c L_c^2 / n_L + sum_c R_c^2 / n_R, i.e. minimizes the
  // weighted child Gini. Splits without gain are still taken.
  Split best_split(const std::vector<Row>& x, const std::vector<std::size_t>& rows) {
    Split best;
    bool found = false;
    std::vector<std::size_t> order(rows);
    std::vector<double> total(n_classes_, 0.0);
    for (std::size_t r : rows) total[y_[r]] += 1.0;
    const double n = static_cast<double>(rows.size());
    for (int f : features_for_node(x.front().size(), max_features_, rng_)) {
      sort_by_feature(x, f, order);
      std::vector<double> left(n_classes_, 0.0);
      double left_sq = 0.0;
      double right_sq = 0.0;
      for (double c : total) right_sq += c * c;
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const int c = y_[order[i]];
        const double lc = left[c];
        const double rc = total[c] - lc;
        left_sq += 2.0 * lc + 1.0;
        right_sq -= 2.0 * rc - 1.0;
        left[c] += 1.0;
        const double a = x[order[i]][f];
        const double b = x[order[i + 1]][f];
        if (!(a < b)) continue;
        const double nl = static_cast<double>(i + 1);
        const double score = left_sq / nl + right_sq / (n - nl);
        if (!found || score > best.score + kGainTolerance) {
          best = {f, midpoint(a, b), score};
          found = true;
        }
      }
    }
    return best;
  }

 private:
  const std::vector<int>& y_;
  int n_classes_;
  int max_features_;
  Rng* rng_;
};

class GradientPolicy {
 public:
  GradientPolicy(const std::vector<double>& grad, const std::vector<double>& hess, double lambda)
      : grad_(grad), hess_(hess), lambda_(lambda) {}

  std::vector<double> leaf_value(const std::vector<std::size_t>& rows) const {
    double g = 0.0, h = 0.0;
    for (std::size_t r : rows) {
      g += grad_[r];
      h += hess_[r];
    }
    return {-g / (h + lambda_)};
  }

  bool pure(const std::vector<std::size_t>&) const { return false; }

  Split best_split(const std::vector<Row>& x, const std::vector<std::size_t>& rows) const {
    double g = 0.0, h = 0.0;
    for (std::size_t r : rows) {
      g += grad_[r];
      h += hess_[r];
    }
    const double parent = g * g / (h + lambda_);
    Split best;
    best.score = parent + kGainTolerance;
    std::vector<std::size_t> order(rows);
    for (int f = 0; f < static_cast<int>(x.front().size()); ++f) {
      sort_by_feature(x, f, order);
      double gl = 0.0, hl = 0.0;
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        gl += grad_[order[i]];
        hl += hess_[order[i]];
        const double a = x[order[i]][f];
        const double b = x[order[i + 1]][f];
        if (!(a < b)) continue;
        const double gr = g - gl;
        const double hr = h - hl;
        const double score = gl * gl / (hl + lambda_) + gr * gr / (hr + lambda_);
        if (score > best.score + (best.feature < 0 ? 0.0 : kGainTolerance)) {
          best = {f, midpoint(a, b), score};
        }
      }
    }
    return best;
  }

 private:
  const std::vector<double>& grad_;
  const std::vector<double>& hess_;
  double lambda_;
};

}  // namespace

const std::vector<double>& Tree::leaf(const Row& x) const {
  int id = 0;
  while (nodes[id].feature >= 0) {
    id = x[nodes[id].feature] <= nodes[id].threshold ? nodes[id].left : nodes[id].right;
  }
  return nodes[id].value;
}

Tree fit_classification_tree(const std::vector<Row>& x, const std::vector<int>& y, int n_classes,
                             const std::vector<std::size_t>& rows, const TreeParams& params,
                             Rng* rng) {
  GiniPolicy policy(y, n_classes, params.max_features, rng);
  return Builder<GiniPolicy>(x, params, policy).build(rows);
}

Tree fit_gradient_tree(const std::vector<Row>& x, const std::vector<double>& grad,
                       const std::vector<double>& hess, const std::vector<std::size_t>& rows,
                       const TreeParams& params, double lambda) {
  GradientPolicy policy(grad, hess, lambda);
  return Builder<GradientPolicy>(x, params, policy).build(rows);
}

int argmax(const std::vector<double>& scores) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(scores.size()); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

}  // namespace gjsp::ml
