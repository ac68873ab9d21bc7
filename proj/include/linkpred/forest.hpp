#pragma once

// Random forest: bagged classification trees with per-split random feature
// subsets, aggregated by majority vote.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "linkpred/dataset.hpp"
#include "linkpred/error.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/tree.hpp"

namespace linkpred {

struct ForestParams {
  std::size_t n_trees = 100;
  std::size_t max_depth = kUnboundedDepth;
  std::size_t min_leaf = 1;
  /// 0 selects floor(sqrt(M)), at least 1.
  std::size_t features_per_split = 0;
  /// Test hook: false trains every tree on the full dataset.
  bool bootstrap = true;
  std::uint64_t seed = 0;
  /// Worker threads for tree training; results do not depend on it.
  unsigned threads = 1;

  friend bool operator==(const ForestParams&, const ForestParams&) = default;
};

inline std::size_t resolved_features_per_split(const ForestParams& params, std::size_t dims) {
  if (params.features_per_split != 0) return params.features_per_split;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(dims))));
}

struct RandomForestModel {
  std::vector<DecisionTree> trees;
  ForestParams params;
  std::size_t dims = 0;

  /// Mean class-1 probability over the trees.
  double probability(std::span<const double> x) const {
    detail::require_dims(x.size(), dims);
    double sum = 0.0;
    for (const DecisionTree& t : trees) sum += t.predict(x);
    return sum / static_cast<double>(trees.size());
  }

  /// Majority vote of tree classes; a tied vote goes to class 1.
  int vote(std::span<const double> x) const {
    detail::require_dims(x.size(), dims);
    std::size_t ones = 0;
    for (const DecisionTree& t : trees) ones += static_cast<std::size_t>(t.predict_class(x));
    return 2 * ones >= trees.size() ? 1 : 0;
  }

  friend bool operator==(const RandomForestModel&, const RandomForestModel&) = default;
};

/// Tree t draws from the stream derive_seed(seed, t): first its bootstrap
/// indices, then one word seeding its feature-subset choices.
inline RandomForestModel train_random_forest(const Dataset& d, const ForestParams& params) {
  detail::require_rows(d);
  if (params.n_trees < 1) detail::fail(ErrorKind::kInvalidParameter, "forest needs at least one tree");
  if (params.features_per_split > d.dims()) {
    detail::fail(ErrorKind::kInvalidParameter,
                 "features_per_split " + std::to_string(params.features_per_split) +
                     " exceeds feature count " + std::to_string(d.dims()));
  }
  RandomForestModel model;
  model.params = params;
  model.dims = d.dims();
  model.trees.resize(params.n_trees);
  const std::vector<double> targets(d.labels().begin(), d.labels().end());
  const std::size_t per_split = resolved_features_per_split(params, d.dims());

  auto grow = [&](std::size_t t) {
    Rng rng(derive_seed(params.seed, t));
    std::vector<std::size_t> rows(d.rows());
    if (params.bootstrap) {
      for (std::size_t& r : rows) r = static_cast<std::size_t>(rng.below(d.rows()));
    } else {
      std::iota(rows.begin(), rows.end(), std::size_t{0});
    }
    TreeParams tree;
    tree.max_depth = params.max_depth;
    tree.min_leaf = params.min_leaf;
    tree.feature_subset = per_split;
    tree.seed = rng.next();
    tree.mode = TreeMode::kClassification;
    model.trees[t] = train_tree(d, targets, std::move(rows), tree);
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(params.threads, static_cast<unsigned>(params.n_trees)));
  if (threads == 1) {
    for (std::size_t t = 0; t < params.n_trees; ++t) grow(t);
    return model;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = next++; t < params.n_trees; t = next++) grow(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return model;
}

}  // namespace linkpred
