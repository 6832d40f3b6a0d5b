#include "gjsp/ml/serialize.hpp"

#include <json.hpp>

#include "gjsp/error.hpp"
#include "gjsp/instance_io.hpp"

namespace gjsp::ml {
namespace {

using json = nlohmann::json;

constexpr const char* kFormatTag = "gjsp-model";

json hyper_to_json(const Hyperparameters& h) {
  return {{"learning_rate", h.learning_rate}, {"epochs", h.epochs},
          {"l2", h.l2},                       {"var_smoothing", h.var_smoothing},
          {"max_depth", h.max_depth},         {"min_split", h.min_split},
          {"max_features", h.max_features},   {"k", h.k},
          {"n_trees", h.n_trees},             {"bootstrap", h.bootstrap},
          {"rounds", h.rounds},               {"lambda", h.lambda},
          {"hidden", h.hidden}};
}

Hyperparameters hyper_from_json(const json& j) {
  Hyperparameters h;
  h.learning_rate = j.at("learning_rate").get<double>();
  h.epochs = j.at("epochs").get<int>();
  h.l2 = j.at("l2").get<double>();
  h.var_smoothing = j.at("var_smoothing").get<double>();
  h.max_depth = j.at("max_depth").get<int>();
  h.min_split = j.at("min_split").get<int>();
  h.max_features = j.at("max_features").get<int>();
  h.k = j.at("k").get<int>();
  h.n_trees = j.at("n_trees").get<int>();
  h.bootstrap = j.at("bootstrap").get<bool>();
  h.rounds = j.at("rounds").get<int>();
  h.lambda = j.at("lambda").get<double>();
  h.hidden = j.at("hidden").get<int>();
  return h;
}

// Nodes as [feature, threshold, left, right, value].
json tree_to_json(const Tree& t) {
  json nodes = json::array();
  for (const TreeNode& n : t.nodes) {
    nodes.push_back(json::array({n.feature, n.threshold, n.left, n.right, n.value}));
  }
  return nodes;
}

Tree tree_from_json(const json& j) {
  Tree t;
  for (const json& n : j) {
    TreeNode node;
    node.feature = n.at(0).get<int>();
    node.threshold = n.at(1).get<double>();
    node.left = n.at(2).get<int>();
    node.right = n.at(3).get<int>();
    node.value = n.at(4).get<std::vector<double>>();
    t.nodes.push_back(std::move(node));
  }
  const int size = static_cast<int>(t.nodes.size());
  if (size == 0) throw SchemaMismatch("empty tree");
  for (const TreeNode& n : t.nodes) {
    if (n.feature >= 0 && (n.left <= 0 || n.left >= size || n.right <= 0 || n.right >= size)) {
      throw SchemaMismatch("tree child index out of range");
    }
  }
  return t;
}

}  // namespace

std::string model_to_json(const TrainedModel& m) {
  json j;
  j["format"] = kFormatTag;
  j["version"] = m.format_version;
  j["family"] = std::string(family_name(m.spec.family));
  j["seed"] = m.spec.seed;
  j["hyperparameters"] = hyper_to_json(m.spec.hyper);
  j["n_features"] = m.n_features;
  j["labels"] = m.labels;
  if (m.standardizer) {
    j["standardizer"] = {{"mean", m.standardizer->mean}, {"scale", m.standardizer->scale}};
  } else {
    j["standardizer"] = nullptr;
  }
  j["weights"] = json::object();
  for (const auto& [name, values] : m.weights) j["weights"][name] = values;
  j["trees"] = json::array();
  for (const Tree& t : m.trees) j["trees"].push_back(tree_to_json(t));
  return j.dump() + "\n";
}

TrainedModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormatTag) {
      throw SchemaMismatch("not a model file");
    }
    TrainedModel m;
    m.format_version = j.at("version").get<int>();
    if (m.format_version != kModelFormatVersion) {
      throw SchemaMismatch("unsupported model version " + std::to_string(m.format_version));
    }
    m.spec.family = parse_family(j.at("family").get<std::string>());
    m.spec.seed = j.at("seed").get<std::uint64_t>();
    m.spec.hyper = hyper_from_json(j.at("hyperparameters"));
    m.n_features = j.at("n_features").get<int>();
    m.labels = j.at("labels").get<std::vector<int>>();
    if (!j.at("standardizer").is_null()) {
      Standardizer s;
      s.mean = j["standardizer"].at("mean").get<std::vector<double>>();
      s.scale = j["standardizer"].at("scale").get<std::vector<double>>();
      m.standardizer = std::move(s);
    }
    for (const auto& [name, values] : j.at("weights").items()) {
      m.weights[name] = values.get<std::vector<double>>();
    }
    for (const json& t : j.at("trees")) m.trees.push_back(tree_from_json(t));
    return m;
  } catch (const json::exception& e) {
    throw SchemaMismatch(std::string("model file: ") + e.what());
  }
}

void write_model(const std::string& path, const TrainedModel& model) {
  write_file(path, model_to_json(model));
}

TrainedModel read_model(const std::string& path) { return model_from_json(read_file(path)); }

}  // namespace gjsp::ml
