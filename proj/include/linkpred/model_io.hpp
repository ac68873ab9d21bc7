#pragma once

// Versioned JSON documents for trained models:
//
//   {"format": "linkpred-model", "version": 1, "type": "<model type>", "model": {...}}
//
// Trees are stored as arrays of [feature, threshold, left, right, value]
// rows, feature -1 marking a leaf. Doubles are written in shortest
// round-trip form, so a loaded model predicts bit-identically.

#include <fstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "linkpred/error.hpp"
#include "linkpred/model.hpp"

namespace linkpred {

inline constexpr std::string_view kModelFormat = "linkpred-model";
inline constexpr int kModelFormatVersion = 1;

namespace detail {

using nlohmann::json;

inline json to_json_value(const SvmParams& p) {
  return {{"C", p.C}, {"eta", p.eta}, {"epochs", p.epochs}, {"tolerance", p.tolerance}, {"seed", p.seed}};
}

inline json to_json_value(const BoostingParams& p) {
  return {{"rounds", p.rounds}, {"eta", p.eta}, {"max_depth", p.max_depth},
          {"min_leaf", p.min_leaf}, {"seed", p.seed}};
}

inline json to_json_value(const ForestParams& p) {
  return {{"n_trees", p.n_trees}, {"max_depth", p.max_depth}, {"min_leaf", p.min_leaf},
          {"features_per_split", p.features_per_split}, {"bootstrap", p.bootstrap},
          {"seed", p.seed}, {"threads", p.threads}};
}

inline json to_json_value(const StackingParams& p) {
  return {{"folds", p.folds}, {"svm", to_json_value(p.svm)}, {"gb", to_json_value(p.boosting)},
          {"rf", to_json_value(p.forest)}, {"meta", to_json_value(p.meta)}, {"seed", p.seed}};
}

inline json to_json_value(const LinearSvmModel& m) {
  return {{"w", m.w},
          {"b", m.b},
          {"standardizer", {{"mean", m.standardizer.mean}, {"scale", m.standardizer.scale}}},
          {"params", to_json_value(m.params)},
          {"epochs_run", m.epochs_run}};
}

inline json to_json_value(const DecisionTree& t) {
  json nodes = json::array();
  for (const TreeNode& n : t.nodes()) nodes.push_back({n.feature, n.threshold, n.left, n.right, n.value});
  return {{"mode", t.mode() == TreeMode::kClassification ? "classification" : "regression"},
          {"dims", t.dims()},
          {"nodes", std::move(nodes)}};
}

inline json to_json_value(const RandomForestModel& m) {
  json trees = json::array();
  for (const DecisionTree& t : m.trees) trees.push_back(to_json_value(t));
  return {{"dims", m.dims}, {"params", to_json_value(m.params)}, {"trees", std::move(trees)}};
}

inline json to_json_value(const GradientBoostingModel& m) {
  json trees = json::array();
  for (const DecisionTree& t : m.trees) trees.push_back(to_json_value(t));
  return {{"f0", m.f0}, {"dims", m.dims}, {"params", to_json_value(m.params)}, {"trees", std::move(trees)}};
}

inline json to_json_value(const StackingModel& m) {
  return {{"params", to_json_value(m.params)}, {"svm", to_json_value(m.svm)},
          {"gb", to_json_value(m.boosting)}, {"rf", to_json_value(m.forest)},
          {"meta", to_json_value(m.meta)}};
}

inline SvmParams svm_params_from(const json& j) {
  SvmParams p;
  p.C = j.at("C").get<double>();
  p.eta = j.at("eta").get<double>();
  p.epochs = j.at("epochs").get<std::size_t>();
  p.tolerance = j.at("tolerance").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

inline BoostingParams boosting_params_from(const json& j) {
  BoostingParams p;
  p.rounds = j.at("rounds").get<std::size_t>();
  p.eta = j.at("eta").get<double>();
  p.max_depth = j.at("max_depth").get<std::size_t>();
  p.min_leaf = j.at("min_leaf").get<std::size_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

inline ForestParams forest_params_from(const json& j) {
  ForestParams p;
  p.n_trees = j.at("n_trees").get<std::size_t>();
  p.max_depth = j.at("max_depth").get<std::size_t>();
  p.min_leaf = j.at("min_leaf").get<std::size_t>();
  p.features_per_split = j.at("features_per_split").get<std::size_t>();
  p.bootstrap = j.at("bootstrap").get<bool>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.threads = j.at("threads").get<unsigned>();
  return p;
}

inline StackingParams stacking_params_from(const json& j) {
  StackingParams p;
  p.folds = j.at("folds").get<std::size_t>();
  p.svm = svm_params_from(j.at("svm"));
  p.boosting = boosting_params_from(j.at("gb"));
  p.forest = forest_params_from(j.at("rf"));
  p.meta = forest_params_from(j.at("meta"));
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

inline LinearSvmModel svm_from(const json& j) {
  LinearSvmModel m;
  m.w = j.at("w").get<std::vector<double>>();
  m.b = j.at("b").get<double>();
  m.standardizer.mean = j.at("standardizer").at("mean").get<std::vector<double>>();
  m.standardizer.scale = j.at("standardizer").at("scale").get<std::vector<double>>();
  m.params = svm_params_from(j.at("params"));
  m.epochs_run = j.at("epochs_run").get<std::size_t>();
  if (m.standardizer.mean.size() != m.w.size() || m.standardizer.scale.size() != m.w.size()) {
    fail(ErrorKind::kMalformedInput, "SVM standardizer length differs from weight length");
  }
  return m;
}

inline DecisionTree tree_from(const json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode != "classification" && mode != "regression") {
    fail(ErrorKind::kMalformedInput, "unknown tree mode '" + mode + "'");
  }
  const auto dims = j.at("dims").get<std::size_t>();
  std::vector<TreeNode> nodes;
  for (const json& row : j.at("nodes")) {
    TreeNode n;
    n.feature = row.at(0).get<std::int32_t>();
    n.threshold = row.at(1).get<double>();
    n.left = row.at(2).get<std::uint32_t>();
    n.right = row.at(3).get<std::uint32_t>();
    n.value = row.at(4).get<double>();
    nodes.push_back(n);
  }
  if (nodes.empty()) fail(ErrorKind::kMalformedInput, "tree has no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const TreeNode& n = nodes[i];
    if (n.is_leaf()) continue;
    // Children always follow their parent, which also rules out cycles.
    if (n.feature < 0 || static_cast<std::size_t>(n.feature) >= dims || n.left <= i || n.right <= i ||
        n.left >= nodes.size() || n.right >= nodes.size()) {
      fail(ErrorKind::kMalformedInput, "tree node " + std::to_string(i) + " is malformed");
    }
  }
  return DecisionTree(mode == "classification" ? TreeMode::kClassification : TreeMode::kRegression, dims,
                      std::move(nodes));
}

inline std::vector<DecisionTree> trees_from(const json& j) {
  std::vector<DecisionTree> trees;
  for (const json& t : j) trees.push_back(tree_from(t));
  return trees;
}

inline RandomForestModel forest_from(const json& j) {
  RandomForestModel m;
  m.dims = j.at("dims").get<std::size_t>();
  m.params = forest_params_from(j.at("params"));
  m.trees = trees_from(j.at("trees"));
  if (m.trees.empty()) fail(ErrorKind::kMalformedInput, "forest has no trees");
  return m;
}

inline GradientBoostingModel boosting_from(const json& j) {
  GradientBoostingModel m;
  m.f0 = j.at("f0").get<double>();
  m.dims = j.at("dims").get<std::size_t>();
  m.params = boosting_params_from(j.at("params"));
  m.trees = trees_from(j.at("trees"));
  return m;
}

inline StackingModel stacking_from(const json& j) {
  StackingModel m;
  m.params = stacking_params_from(j.at("params"));
  m.svm = svm_from(j.at("svm"));
  m.boosting = boosting_from(j.at("gb"));
  m.forest = forest_from(j.at("rf"));
  m.meta = forest_from(j.at("meta"));
  return m;
}

}  // namespace detail

inline nlohmann::json model_to_json(const Model& m) {
  nlohmann::json body = std::visit([](const auto& model) { return detail::to_json_value(model); }, m);
  return {{"format", kModelFormat},
          {"version", kModelFormatVersion},
          {"type", model_type(m)},
          {"model", std::move(body)}};
}

inline Model model_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != kModelFormat) {
      detail::fail(ErrorKind::kMalformedInput, "not a linkpred model document");
    }
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      detail::fail(ErrorKind::kMalformedInput, "unsupported model format version " + std::to_string(version));
    }
    const std::string type = doc.at("type").get<std::string>();
    const nlohmann::json& body = doc.at("model");
    if (type == "linear_svm") return detail::svm_from(body);
    if (type == "decision_tree") return detail::tree_from(body);
    if (type == "random_forest") return detail::forest_from(body);
    if (type == "gradient_boosting") return detail::boosting_from(body);
    if (type == "stacking") return detail::stacking_from(body);
    detail::fail(ErrorKind::kMalformedInput, "unknown model type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    detail::fail(ErrorKind::kMalformedInput, std::string("model document: ") + e.what());
  }
}

inline void save_model(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) detail::fail(ErrorKind::kMalformedInput, "cannot write model file " + path);
  out << model_to_json(m).dump(1) << '\n';
}

inline Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::kMalformedInput, "cannot read model file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    detail::fail(ErrorKind::kMalformedInput, "model file " + path + ": " + e.what());
  }
  return model_from_json(doc);
}

}  // namespace linkpred
