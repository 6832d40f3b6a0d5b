#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gjsp/ml/dataset.hpp"
#include "gjsp/ml/tree.hpp"

namespace gjsp::ml {

enum class Family : int {
  Logistic = 0,
  GaussianNb,
  DecisionTree,
  Knn,
  RandomForest,
  GradientBoostedTrees,
  Mlp
};

inline constexpr std::array<Family, 7> kFamilies = {
    Family::Logistic, Family::GaussianNb,           Family::DecisionTree, Family::Knn,
    Family::RandomForest, Family::GradientBoostedTrees, Family::Mlp};

std::string_view family_name(Family family);  // "logistic", "gaussian_nb", ...
Family parse_family(std::string_view name);

// Union of every family's knobs; each family reads its own.
struct Hyperparameters {
  double learning_rate = 0.1;
  int epochs = 500;
  double l2 = 1e-4;
  double var_smoothing = 1e-9;
  int max_depth = 12;  // 0 = unlimited
  int min_split = 2;
  int max_features = 0;
  int k = 5;
  int n_trees = 100;
  bool bootstrap = true;
  int rounds = 100;
  double lambda = 1.0;
  int hidden = 64;

  bool operator==(const Hyperparameters&) const = default;
};

struct ModelSpec {
  Family family = Family::GradientBoostedTrees;
  Hyperparameters hyper;
  std::uint64_t seed = 0;

  bool operator==(const ModelSpec&) const = default;
};

// Spec with the family's default hyperparameters.
ModelSpec default_spec(Family family, std::uint64_t seed = 0);

inline constexpr int kModelFormatVersion = 1;

struct TrainedModel {
  int format_version = kModelFormatVersion;
  ModelSpec spec;
  int n_features = 0;
  std::vector<int> labels;  // class index -> label, ascending
  std::optional<Standardizer> standardizer;
  std::map<std::string, std::vector<double>> weights;  // named flat parameter blocks
  std::vector<Tree> trees;

  int n_classes() const { return static_cast<int>(labels.size()); }
  bool operator==(const TrainedModel&) const = default;
};

// Trains one family. Standardizes for logistic, knn and mlp. Throws
// ClassTooSmall for fewer than two classes and NonFiniteFeature.
TrainedModel fit(const ModelSpec& spec, const LabeledDataset& train);

// Per-class scores; larger is better. Throws DimensionMismatch.
std::vector<double> predict_scores(const TrainedModel& model, const Row& x);
// Label with the largest score, lowest label on ties.
int predict(const TrainedModel& model, const Row& x);
std::vector<int> predict(const TrainedModel& model, const std::vector<Row>& rows);

// Mean softmax cross-entropy of a one-hidden-layer network and its gradient
// with respect to the flat parameter vector [w1 (h x d), b1 (h), w2 (c x h),
// b2 (c)]. Inputs are used as given (no standardization).
struct MlpShape {
  int inputs = 0;
  int hidden = 0;
  int outputs = 0;
  std::size_t size() const {
    return static_cast<std::size_t>(hidden) * inputs + hidden +
           static_cast<std::size_t>(outputs) * hidden + outputs;
  }
};
double mlp_loss_and_gradient(const MlpShape& shape, const std::vector<double>& params,
                             const std::vector<Row>& x, const std::vector<int>& y,
                             std::vector<double>* gradient);

}  // namespace gjsp::ml
