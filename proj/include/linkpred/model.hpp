#pragma once

#include <span>
#include <string_view>
#include <type_traits>
#include <variant>

#include "linkpred/boosting.hpp"
#include "linkpred/dataset.hpp"
#include "linkpred/forest.hpp"
#include "linkpred/stacking.hpp"
#include "linkpred/svm.hpp"
#include "linkpred/tree.hpp"

namespace linkpred {

using Model = std::variant<LinearSvmModel, DecisionTree, RandomForestModel, GradientBoostingModel,
                           StackingModel>;

struct Prediction {
  int label = 0;
  /// Increases with the predicted class-1 likelihood; suitable for ranking.
  double score = 0.0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

inline std::string_view model_type(const Model& m) {
  return std::visit(
      [](const auto& model) -> std::string_view {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, LinearSvmModel>) return "linear_svm";
        else if constexpr (std::is_same_v<T, DecisionTree>) return "decision_tree";
        else if constexpr (std::is_same_v<T, RandomForestModel>) return "random_forest";
        else if constexpr (std::is_same_v<T, GradientBoostingModel>) return "gradient_boosting";
        else return "stacking";
      },
      m);
}

inline Prediction predict(const LinearSvmModel& m, std::span<const double> x) {
  const double s = m.score(x);
  return {s >= 0.0 ? 1 : 0, s};
}

inline Prediction predict(const DecisionTree& m, std::span<const double> x) {
  const double p = m.predict(x);
  return {p >= 0.5 ? 1 : 0, p};
}

inline Prediction predict(const RandomForestModel& m, std::span<const double> x) {
  return {m.vote(x), m.probability(x)};
}

/// Scored by the unclamped ensemble output so saturated rows still rank.
inline Prediction predict(const GradientBoostingModel& m, std::span<const double> x) {
  return {m.label(x), m.raw(x)};
}

inline Prediction predict(const StackingModel& m, std::span<const double> x) {
  const auto base = m.base_scores(x);
  return predict(m.meta, base);
}

inline Prediction predict(const Model& m, std::span<const double> x) {
  return std::visit([&](const auto& model) { return predict(model, x); }, m);
}

inline std::size_t model_dims(const Model& m) {
  return std::visit(
      [](const auto& model) -> std::size_t {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, LinearSvmModel> || std::is_same_v<T, DecisionTree> ||
                      std::is_same_v<T, StackingModel>) {
          return model.dims();
        } else {
          return model.dims;
        }
      },
      m);
}

}  // namespace linkpred
