#pragma once

// Gradient boosting under squared-error loss on {0,1} targets: F0 is the
// label mean, each round fits a regression tree to the residuals y - F and
// adds it scaled by eta.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "linkpred/dataset.hpp"
#include "linkpred/error.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/tree.hpp"

namespace linkpred {

struct BoostingParams {
  std::size_t rounds = 100;
  double eta = 0.1;
  std::size_t max_depth = 3;
  std::size_t min_leaf = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const BoostingParams&, const BoostingParams&) = default;
};

struct GradientBoostingModel {
  double f0 = 0.0;
  std::vector<DecisionTree> trees;
  BoostingParams params;
  std::size_t dims = 0;

  /// Unclamped ensemble output F_T(x).
  double raw(std::span<const double> x) const {
    detail::require_dims(x.size(), dims);
    double f = f0;
    for (const DecisionTree& t : trees) f += params.eta * t.predict(x);
    return f;
  }

  double probability(std::span<const double> x) const { return std::clamp(raw(x), 0.0, 1.0); }

  int label(std::span<const double> x) const { return probability(x) >= 0.5 ? 1 : 0; }

  friend bool operator==(const GradientBoostingModel&, const GradientBoostingModel&) = default;
};

/// When `mse_trace` is given it receives the training MSE of F0 followed by
/// the MSE after every round.
inline GradientBoostingModel train_gradient_boosting(const Dataset& d, const BoostingParams& params,
                                                     std::vector<double>* mse_trace = nullptr) {
  detail::require_rows(d);
  if (params.rounds < 1) detail::fail(ErrorKind::kInvalidParameter, "boosting needs at least one round");
  if (!(params.eta > 0.0)) detail::fail(ErrorKind::kInvalidParameter, "boosting needs eta > 0");
  const std::size_t n = d.rows();
  GradientBoostingModel model;
  model.params = params;
  model.dims = d.dims();

  double label_sum = 0.0;
  for (int y : d.labels()) label_sum += y;
  model.f0 = label_sum / static_cast<double>(n);

  std::vector<double> f(n, model.f0);
  std::vector<double> residual(n);
  std::vector<std::size_t> all_rows(n);
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  auto mse = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = d.label(i) - f[i];
      s += r * r;
    }
    return s / static_cast<double>(n);
  };
  if (mse_trace) {
    mse_trace->clear();
    mse_trace->push_back(mse());
  }

  TreeParams tree;
  tree.max_depth = params.max_depth;
  tree.min_leaf = params.min_leaf;
  tree.mode = TreeMode::kRegression;
  model.trees.reserve(params.rounds);
  for (std::size_t t = 0; t < params.rounds; ++t) {
    // Negative gradient of (y - F)^2 / 2 with respect to F.
    for (std::size_t i = 0; i < n; ++i) residual[i] = d.label(i) - f[i];
    tree.seed = derive_seed(params.seed, t);
    DecisionTree h = train_tree(d, residual, all_rows, tree);
    for (std::size_t i = 0; i < n; ++i) f[i] += params.eta * h.predict(d.row(i));
    model.trees.push_back(std::move(h));
    if (mse_trace) mse_trace->push_back(mse());
  }
  return model;
}

}  // namespace linkpred
