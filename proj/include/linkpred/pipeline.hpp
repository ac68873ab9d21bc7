#pragma once

// End-to-end evaluation of one method on a prepared split: score (or train
// and predict) the train, test and validation pair sets and compute their
// ranking metrics. Index methods score against the train graph; learners
// train on features of the train pairs, also extracted from the train graph.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkpred/features.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/model.hpp"
#include "linkpred/scoring.hpp"
#include "linkpred/split.hpp"

namespace linkpred {

enum class Method { kCnc, kJc, kAai, kCn, kSvm, kGb, kRf, kStacking };

inline constexpr std::array kAllMethods = {Method::kCnc, Method::kJc, Method::kAai, Method::kCn,
                                           Method::kSvm, Method::kGb, Method::kRf, Method::kStacking};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::kCnc: return "cnc";
    case Method::kJc: return "jc";
    case Method::kAai: return "aai";
    case Method::kCn: return "cn";
    case Method::kSvm: return "svm";
    case Method::kGb: return "gb";
    case Method::kRf: return "rf";
    case Method::kStacking: return "stacking";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

inline bool is_learner(Method m) {
  return m == Method::kSvm || m == Method::kGb || m == Method::kRf || m == Method::kStacking;
}

inline std::optional<IndexKind> index_of(Method m) {
  switch (m) {
    case Method::kCnc: return IndexKind::kCnc;
    case Method::kJc: return IndexKind::kJaccard;
    case Method::kAai: return IndexKind::kAdamicAdar;
    case Method::kCn: return IndexKind::kCommonNeighbors;
    default: return std::nullopt;
  }
}

struct PipelineConfig {
  double alpha = CncParams::kDefaultAlpha;
  std::size_t k = 50;
  SvmParams svm;
  BoostingParams boosting;
  ForestParams forest;
  StackingParams stacking;
  unsigned threads = 1;
};

struct SetResult {
  std::vector<ScoredPair> scored;
  double auc_roc = 0.0;
  double p_at_k = 0.0;
  /// k actually used: min(configured k, pair count).
  std::size_t k = 0;
  double aupr = 0.0;
  /// Learners only.
  std::optional<ClassificationReport> report;
};

struct MethodRun {
  Method method = Method::kAai;
  SetResult train;
  SetResult test;
  SetResult valid;
  std::optional<Model> model;
};

inline SetResult summarize(std::vector<ScoredPair> scored, std::size_t k) {
  SetResult r;
  r.auc_roc = auc_roc(scored);
  r.aupr = aupr(scored);
  r.k = std::min(k, scored.size());
  r.p_at_k = precision_at_k(scored, r.k);
  r.scored = std::move(scored);
  return r;
}

inline Model train_learner(Method m, const Dataset& train, const PipelineConfig& config) {
  switch (m) {
    case Method::kSvm: return train_svm(train, config.svm);
    case Method::kGb: return train_gradient_boosting(train, config.boosting);
    case Method::kRf: return train_random_forest(train, config.forest);
    case Method::kStacking: return train_stacking(train, config.stacking);
    default: detail::fail(ErrorKind::kInvalidParameter, std::string(method_name(m)) + " is not a learner");
  }
}

/// Scores `pairs` with a trained model on features from `g`.
inline std::vector<ScoredPair> score_with_model(const Model& model, const Graph& g,
                                                std::span<const LabeledPair> pairs, CncParams cnc,
                                                std::vector<int>* predicted = nullptr) {
  std::vector<ScoredPair> out;
  out.reserve(pairs.size());
  if (predicted) predicted->clear();
  for (const LabeledPair& p : pairs) {
    const FeatureVector x = extract_features(g, p.u, p.v, cnc, EdgeVisibility::kHideDirectEdge);
    const Prediction pred = predict(model, x);
    out.push_back({p.u, p.v, pred.score, p.label});
    if (predicted) predicted->push_back(pred.label);
  }
  return out;
}

inline MethodRun run_method(const EdgeSplit& split, Method method, const PipelineConfig& config) {
  const CncParams cnc(config.alpha);
  const auto train_pairs = labeled_pairs(split.train_pos, split.train_neg);
  const auto test_pairs = labeled_pairs(split.test_pos, split.test_neg);
  const auto valid_pairs = labeled_pairs(split.valid_pos, split.valid_neg);
  MethodRun run;
  run.method = method;

  if (const auto kind = index_of(method)) {
    const IndexScorer scorer{*kind, cnc};
    run.train = summarize(score_pairs(scorer, split.train_graph, train_pairs, config.threads), config.k);
    run.test = summarize(score_pairs(scorer, split.train_graph, test_pairs, config.threads), config.k);
    run.valid = summarize(score_pairs(scorer, split.train_graph, valid_pairs, config.threads), config.k);
    return run;
  }

  const Dataset train = build_dataset(split.train_graph, train_pairs, cnc);
  run.model = train_learner(method, train, config);
  auto evaluate = [&](std::span<const LabeledPair> pairs) {
    std::vector<int> predicted;
    auto scored = score_with_model(*run.model, split.train_graph, pairs, cnc, &predicted);
    std::vector<int> actual;
    actual.reserve(pairs.size());
    for (const LabeledPair& p : pairs) actual.push_back(p.label);
    SetResult r = summarize(std::move(scored), config.k);
    r.report = classification_report(predicted, actual);
    return r;
  };
  run.train = evaluate(train_pairs);
  run.test = evaluate(test_pairs);
  run.valid = evaluate(valid_pairs);
  return run;
}

}  // namespace linkpred
