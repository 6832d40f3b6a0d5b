#include "gjsp/ml/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gjsp/error.hpp"
#include "gjsp/gen/rng.hpp"

namespace gjsp::ml {
namespace {

// Stream tags so that families drawing randomness never share a sequence.
constexpr std::uint64_t kForestStream = 0x7265'6573'7473;
constexpr std::uint64_t kMlpStream = 0x6d6c'70;

void softmax_inplace(std::vector<double>& z) {
  const double top = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - top);
    sum += v;
  }
  for (double& v : z) v /= sum;
}

std::vector<int> class_indices(const LabeledDataset& data, const std::vector<int>& labels) {
  std::vector<int> idx(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    idx[i] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), data.y[i]) -
                              labels.begin());
  }
  return idx;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

TreeParams tree_params(const Hyperparameters& h) {
  return {h.max_depth, h.min_split, h.max_features};
}

// --- logistic regression --------------------------------------------------

void fit_logistic(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  const auto& h = m.spec.hyper;
  const int k = m.n_classes();
  const int d = m.n_features;
  const double n = static_cast<double>(x.size());
  std::vector<double> w(static_cast<std::size_t>(k) * d, 0.0), b(k, 0.0);
  std::vector<double> gw(w.size()), gb(k), z(k);
  for (int epoch = 0; epoch < h.epochs; ++epoch) {
    std::fill(gw.begin(), gw.end(), 0.0);
    std::fill(gb.begin(), gb.end(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int c = 0; c < k; ++c) {
        z[c] = b[c];
        for (int f = 0; f < d; ++f) z[c] += w[c * d + f] * x[i][f];
      }
      softmax_inplace(z);
      for (int c = 0; c < k; ++c) {
        const double r = (z[c] - (y[i] == c ? 1.0 : 0.0)) / n;
        gb[c] += r;
        for (int f = 0; f < d; ++f) gw[c * d + f] += r * x[i][f];
      }
    }
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= h.learning_rate * (gw[j] + h.l2 * w[j]);
    for (int c = 0; c < k; ++c) b[c] -= h.learning_rate * gb[c];
  }
  m.weights["w"] = std::move(w);
  m.weights["b"] = std::move(b);
}

std::vector<double> scores_logistic(const TrainedModel& m, const Row& x) {
  const auto& w = m.weights.at("w");
  const auto& b = m.weights.at("b");
  const int d = m.n_features;
  std::vector<double> z(b);
  for (int c = 0; c < m.n_classes(); ++c)
    for (int f = 0; f < d; ++f) z[c] += w[c * d + f] * x[f];
  return z;
}

// --- gaussian naive bayes ---------------------------------------------------

void fit_gaussian_nb(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  const int k = m.n_classes();
  const int d = m.n_features;
  const Standardizer whole = Standardizer::fit(x);
  double max_var = 0.0;
  for (int f = 0; f < d; ++f) {
    double v = 0.0;
    for (const Row& r : x) v += (r[f] - whole.mean[f]) * (r[f] - whole.mean[f]);
    max_var = std::max(max_var, v / static_cast<double>(x.size()));
  }
  double eps = m.spec.hyper.var_smoothing * max_var;
  if (!(eps > 0.0)) eps = m.spec.hyper.var_smoothing > 0.0 ? m.spec.hyper.var_smoothing : 1e-9;

  std::vector<double> count(k, 0.0), mean(static_cast<std::size_t>(k) * d, 0.0),
      var(static_cast<std::size_t>(k) * d, 0.0), prior(k);
  for (std::size_t i = 0; i < x.size(); ++i) {
    count[y[i]] += 1.0;
    for (int f = 0; f < d; ++f) mean[y[i] * d + f] += x[i][f];
  }
  for (int c = 0; c < k; ++c)
    for (int f = 0; f < d; ++f) mean[c * d + f] /= count[c];
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int f = 0; f < d; ++f) {
      const double r = x[i][f] - mean[y[i] * d + f];
      var[y[i] * d + f] += r * r;
    }
  }
  for (int c = 0; c < k; ++c) {
    prior[c] = std::log(count[c] / static_cast<double>(x.size()));
    for (int f = 0; f < d; ++f) var[c * d + f] = var[c * d + f] / count[c] + eps;
  }
  m.weights["log_prior"] = std::move(prior);
  m.weights["mean"] = std::move(mean);
  m.weights["var"] = std::move(var);
}

std::vector<double> scores_gaussian_nb(const TrainedModel& m, const Row& x) {
  static const double kLog2Pi = std::log(2.0 * std::acos(-1.0));
  const auto& mean = m.weights.at("mean");
  const auto& var = m.weights.at("var");
  const int d = m.n_features;
  std::vector<double> s(m.weights.at("log_prior"));
  for (int c = 0; c < m.n_classes(); ++c) {
    for (int f = 0; f < d; ++f) {
      const double v = var[c * d + f];
      const double r = x[f] - mean[c * d + f];
      s[c] -= 0.5 * (kLog2Pi + std::log(v) + r * r / v);
    }
  }
  return s;
}

// --- trees ----------------------------------------------------------------------

std::vector<double> proportions(const std::vector<double>& counts) {
  double total = 0.0;
  for (double c : counts) total += c;
  std::vector<double> p(counts);
  if (total > 0.0)
    for (double& v : p) v /= total;
  return p;
}

void fit_decision_tree(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  TreeParams params = tree_params(m.spec.hyper);
  params.max_features = 0;
  m.trees.push_back(
      fit_classification_tree(x, y, m.n_classes(), all_rows(x.size()), params, nullptr));
}

void fit_random_forest(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  const auto& h = m.spec.hyper;
  const TreeParams params = tree_params(h);
  for (int t = 0; t < h.n_trees; ++t) {
    Rng rng(mix_seed(mix_seed(m.spec.seed, kForestStream), static_cast<std::uint64_t>(t)));
    std::vector<std::size_t> rows;
    if (h.bootstrap) {
      rows.resize(x.size());
      for (auto& r : rows) {
        r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(x.size()) - 1));
      }
      std::sort(rows.begin(), rows.end());
    } else {
      rows = all_rows(x.size());
    }
    m.trees.push_back(fit_classification_tree(x, y, m.n_classes(), rows, params, &rng));
  }
}

std::vector<double> scores_forest(const TrainedModel& m, const Row& x) {
  std::vector<double> votes(m.n_classes(), 0.0);
  for (const Tree& t : m.trees) votes[argmax(t.leaf(x))] += 1.0;
  return votes;
}

void fit_boosted(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  const auto& h = m.spec.hyper;
  const int k = m.n_classes();
  const std::size_t n = x.size();
  std::vector<double> init(k, 0.0);
  for (int c : y) init[c] += 1.0;
  for (double& v : init) v = std::log(v / static_cast<double>(n));

  std::vector<std::vector<double>> f(n, init);
  std::vector<std::vector<double>> grad(k, std::vector<double>(n)), hess(grad);
  const std::vector<std::size_t> rows = all_rows(n);
  const TreeParams params = tree_params(h);
  for (int round = 0; round < h.rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> p(f[i]);
      softmax_inplace(p);
      for (int c = 0; c < k; ++c) {
        grad[c][i] = p[c] - (y[i] == c ? 1.0 : 0.0);
        hess[c][i] = std::max(p[c] * (1.0 - p[c]), 1e-16);
      }
    }
    for (int c = 0; c < k; ++c) {
      Tree t = fit_gradient_tree(x, grad[c], hess[c], rows, params, h.lambda);
      for (std::size_t i = 0; i < n; ++i) f[i][c] += h.learning_rate * t.leaf(x[i])[0];
      m.trees.push_back(std::move(t));
    }
  }
  m.weights["init"] = std::move(init);
}

std::vector<double> scores_boosted(const TrainedModel& m, const Row& x) {
  std::vector<double> s(m.weights.at("init"));
  const int k = m.n_classes();
  for (std::size_t t = 0; t < m.trees.size(); ++t) {
    s[t % k] += m.spec.hyper.learning_rate * m.trees[t].leaf(x)[0];
  }
  return s;
}

// --- k nearest neighbours ------------------------------------------------------

void fit_knn(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  std::vector<double> flat, labels;
  flat.reserve(x.size() * m.n_features);
  for (std::size_t i = 0; i < x.size(); ++i) {
    flat.insert(flat.end(), x[i].begin(), x[i].end());
    labels.push_back(y[i]);
  }
  m.weights["x"] = std::move(flat);
  m.weights["y"] = std::move(labels);
}

std::vector<double> scores_knn(const TrainedModel& m, const Row& x) {
  const auto& flat = m.weights.at("x");
  const auto& labels = m.weights.at("y");
  const int d = m.n_features;
  const std::size_t n = labels.size();
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int f = 0; f < d; ++f) {
      const double r = flat[i * d + f] - x[f];
      s += r * r;
    }
    dist[i] = {s, i};
  }
  const std::size_t k = std::min<std::size_t>(std::max(1, m.spec.hyper.k), n);
  std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
  std::vector<double> votes(m.n_classes(), 0.0);
  for (std::size_t i = 0; i < k; ++i) votes[static_cast<int>(labels[dist[i].second])] += 1.0;
  return votes;
}

// --- multi-layer perceptron ----------------------------------------------------

MlpShape mlp_shape(const TrainedModel& m) {
  return {m.n_features, m.spec.hyper.hidden, m.n_classes()};
}

std::vector<double> mlp_logits(const MlpShape& sh, const std::vector<double>& p, const Row& x,
                               std::vector<double>* hidden_pre) {
  const std::size_t b1 = static_cast<std::size_t>(sh.hidden) * sh.inputs;
  const std::size_t w2 = b1 + sh.hidden;
  const std::size_t b2 = w2 + static_cast<std::size_t>(sh.outputs) * sh.hidden;
  std::vector<double> z1(sh.hidden);
  for (int j = 0; j < sh.hidden; ++j) {
    double s = p[b1 + j];
    for (int i = 0; i < sh.inputs; ++i) s += p[j * sh.inputs + i] * x[i];
    z1[j] = s;
  }
  std::vector<double> z2(sh.outputs);
  for (int c = 0; c < sh.outputs; ++c) {
    double s = p[b2 + c];
    for (int j = 0; j < sh.hidden; ++j) s += p[w2 + c * sh.hidden + j] * std::max(0.0, z1[j]);
    z2[c] = s;
  }
  if (hidden_pre) *hidden_pre = std::move(z1);
  return z2;
}

void fit_mlp(TrainedModel& m, const std::vector<Row>& x, const std::vector<int>& y) {
  const auto& h = m.spec.hyper;
  const MlpShape sh = mlp_shape(m);
  std::vector<double> p(sh.size(), 0.0);
  Rng rng(mix_seed(m.spec.seed, kMlpStream));
  const double a1 = 1.0 / std::sqrt(static_cast<double>(sh.inputs));
  const double a2 = 1.0 / std::sqrt(static_cast<double>(sh.hidden));
  const std::size_t b1 = static_cast<std::size_t>(sh.hidden) * sh.inputs;
  const std::size_t w2 = b1 + sh.hidden;
  const std::size_t b2 = w2 + static_cast<std::size_t>(sh.outputs) * sh.hidden;
  for (std::size_t i = 0; i < b1; ++i) p[i] = rng.uniform_real(-a1, a1);
  for (std::size_t i = w2; i < b2; ++i) p[i] = rng.uniform_real(-a2, a2);
  std::vector<double> g;
  for (int epoch = 0; epoch < h.epochs; ++epoch) {
    mlp_loss_and_gradient(sh, p, x, y, &g);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= h.learning_rate * g[i];
  }
  m.weights["params"] = std::move(p);
}

}  // namespace

double mlp_loss_and_gradient(const MlpShape& sh, const std::vector<double>& p,
                             const std::vector<Row>& x, const std::vector<int>& y,
                             std::vector<double>* gradient) {
  if (p.size() != sh.size()) throw DimensionMismatch("mlp parameter count");
  const std::size_t b1 = static_cast<std::size_t>(sh.hidden) * sh.inputs;
  const std::size_t w2 = b1 + sh.hidden;
  const std::size_t b2 = w2 + static_cast<std::size_t>(sh.outputs) * sh.hidden;
  const double n = static_cast<double>(x.size());
  if (gradient) gradient->assign(p.size(), 0.0);
  double loss = 0.0;
  std::vector<double> z1, dz1(sh.hidden);
  for (std::size_t s = 0; s < x.size(); ++s) {
    std::vector<double> prob = mlp_logits(sh, p, x[s], &z1);
    softmax_inplace(prob);
    loss -= std::log(std::max(prob[y[s]], 1e-300)) / n;
    if (!gradient) continue;
    auto& g = *gradient;
    std::fill(dz1.begin(), dz1.end(), 0.0);
    for (int c = 0; c < sh.outputs; ++c) {
      const double dz2 = (prob[c] - (y[s] == c ? 1.0 : 0.0)) / n;
      g[b2 + c] += dz2;
      for (int j = 0; j < sh.hidden; ++j) {
        g[w2 + c * sh.hidden + j] += dz2 * std::max(0.0, z1[j]);
        dz1[j] += dz2 * p[w2 + c * sh.hidden + j];
      }
    }
    for (int j = 0; j < sh.hidden; ++j) {
      if (z1[j] <= 0.0) continue;
      g[b1 + j] += dz1[j];
      for (int i = 0; i < sh.inputs; ++i) g[j * sh.inputs + i] += dz1[j] * x[s][i];
    }
  }
  return loss;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Logistic: return "logistic";
    case Family::GaussianNb: return "gaussian_nb";
    case Family::DecisionTree: return "decision_tree";
    case Family::Knn: return "knn";
    case Family::RandomForest: return "random_forest";
    case Family::GradientBoostedTrees: return "gradient_boosted_trees";
    case Family::Mlp: return "mlp";
  }
  return "logistic";
}

Family parse_family(std::string_view name) {
  for (Family f : kFamilies) {
    if (family_name(f) == name) return f;
  }
  throw ParseError("unknown model family '" + std::string(name) + "'");
}

ModelSpec default_spec(Family family, std::uint64_t seed) {
  ModelSpec spec;
  spec.family = family;
  spec.seed = seed;
  Hyperparameters& h = spec.hyper;
  switch (family) {
    case Family::RandomForest:
      h.max_features = 4;
      break;
    case Family::GradientBoostedTrees:
      h.max_depth = 4;
      h.learning_rate = 0.1;
      break;
    case Family::Mlp:
      h.learning_rate = 0.01;
      h.epochs = 200;
      break;
    default:
      break;
  }
  return spec;
}

TrainedModel fit(const ModelSpec& spec, const LabeledDataset& train) {
  check_dataset(train, 2);
  TrainedModel m;
  m.spec = spec;
  m.n_features = static_cast<int>(train.dim());
  m.labels = train.classes();
  const std::vector<int> y = class_indices(train, m.labels);
  const bool standardize =
      spec.family == Family::Logistic || spec.family == Family::Knn || spec.family == Family::Mlp;
  if (standardize) m.standardizer = Standardizer::fit(train.x);
  const std::vector<Row> x = standardize ? m.standardizer->apply(train.x) : train.x;
  switch (spec.family) {
    case Family::Logistic: fit_logistic(m, x, y); break;
    case Family::GaussianNb: fit_gaussian_nb(m, x, y); break;
    case Family::DecisionTree: fit_decision_tree(m, x, y); break;
    case Family::Knn: fit_knn(m, x, y); break;
    case Family::RandomForest: fit_random_forest(m, x, y); break;
    case Family::GradientBoostedTrees: fit_boosted(m, x, y); break;
    case Family::Mlp: fit_mlp(m, x, y); break;
  }
  return m;
}

std::vector<double> predict_scores(const TrainedModel& model, const Row& raw) {
  if (static_cast<int>(raw.size()) != model.n_features) {
    throw DimensionMismatch("expected " + std::to_string(model.n_features) + " features, got " +
                            std::to_string(raw.size()));
  }
  const Row x = model.standardizer ? model.standardizer->apply(raw) : raw;
  switch (model.spec.family) {
    case Family::Logistic: return scores_logistic(model, x);
    case Family::GaussianNb: return scores_gaussian_nb(model, x);
    case Family::DecisionTree: return proportions(model.trees.at(0).leaf(x));
    case Family::Knn: return scores_knn(model, x);
    case Family::RandomForest: return scores_forest(model, x);
    case Family::GradientBoostedTrees: return scores_boosted(model, x);
    case Family::Mlp: return mlp_logits(mlp_shape(model), model.weights.at("params"), x, nullptr);
  }
  return {};
}

int predict(const TrainedModel& model, const Row& x) {
  return model.labels.at(argmax(predict_scores(model, x)));
}

std::vector<int> predict(const TrainedModel& model, const std::vector<Row>& rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (const Row& r : rows) out.push_back(predict(model, r));
  return out;
}

}  // namespace gjsp::ml
