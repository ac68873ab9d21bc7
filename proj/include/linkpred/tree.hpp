#pragma once

// CART-style binary decision trees. Classification trees minimise Gini
// impurity and store the class-1 fraction in each leaf; regression trees
// minimise squared error and store the leaf mean. A row goes left when
// x[feature] <= threshold.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linkpred/dataset.hpp"
#include "linkpred/error.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

enum class TreeMode { kClassification, kRegression };

inline constexpr std::size_t kUnboundedDepth = std::numeric_limits<std::size_t>::max();

struct TreeParams {
  std::size_t max_depth = kUnboundedDepth;
  std::size_t min_leaf = 1;
  /// Features examined per split; 0 means all of them.
  std::size_t feature_subset = 0;
  std::uint64_t seed = 0;
  TreeMode mode = TreeMode::kClassification;

  friend bool operator==(const TreeParams&, const TreeParams&) = default;
};

struct TreeNode {
  static constexpr std::int32_t kLeaf = -1;

  std::int32_t feature = kLeaf;
  double threshold = 0.0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  /// Leaf output: class-1 probability or regression mean.
  double value = 0.0;

  bool is_leaf() const noexcept { return feature == kLeaf; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

class DecisionTree {
 public:
  DecisionTree() = default;
  DecisionTree(TreeMode mode, std::size_t dims, std::vector<TreeNode> nodes)
      : mode_(mode), dims_(dims), nodes_(std::move(nodes)) {}

  TreeMode mode() const noexcept { return mode_; }
  std::size_t dims() const noexcept { return dims_; }
  std::span<const TreeNode> nodes() const noexcept { return nodes_; }

  std::size_t depth() const { return nodes_.empty() ? 0 : depth_from(0); }

  /// Leaf value reached by x.
  double predict(std::span<const double> x) const {
    detail::require_dims(x.size(), dims_);
    std::size_t i = 0;
    while (!nodes_[i].is_leaf()) {
      const TreeNode& n = nodes_[i];
      i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
    return nodes_[i].value;
  }

  /// Majority class of the leaf; an even split goes to class 1.
  int predict_class(std::span<const double> x) const { return predict(x) >= 0.5 ? 1 : 0; }

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

 private:
  std::size_t depth_from(std::size_t i) const {
    const TreeNode& n = nodes_[i];
    if (n.is_leaf()) return 0;
    return 1 + std::max(depth_from(n.left), depth_from(n.right));
  }

  TreeMode mode_ = TreeMode::kClassification;
  std::size_t dims_ = 0;
  std::vector<TreeNode> nodes_;
};

namespace detail {

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& d, std::span<const double> targets, const TreeParams& params)
      : data_(d), targets_(targets), params_(params), rng_(params.seed) {
    features_.resize(d.dims());
    std::iota(features_.begin(), features_.end(), std::size_t{0});
  }

  DecisionTree build(std::vector<std::size_t> rows) {
    grow(rows, 0);
    return DecisionTree(params_.mode, data_.dims(), std::move(nodes_));
  }

 private:
  struct Split {
    std::size_t feature = 0;
    double threshold = 0.0;
    double impurity = std::numeric_limits<double>::infinity();
  };

  // Impurity of a node of n rows with target sum s and square sum ss,
  // weighted by n: n * Gini for classification, SSE for regression.
  double weighted_impurity(double n, double s, double ss) const {
    if (n == 0.0) return 0.0;
    if (params_.mode == TreeMode::kClassification) {
      const double p = s / n;
      return n * (1.0 - p * p - (1.0 - p) * (1.0 - p));
    }
    return std::max(0.0, ss - s * s / n);
  }

  std::uint32_t grow(std::span<std::size_t> rows, std::size_t depth) {
    const auto index = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    double sum = 0.0;
    bool pure = true;
    const double first = targets_[rows.front()];
    for (std::size_t r : rows) {
      sum += targets_[r];
      pure = pure && targets_[r] == first;
    }
    nodes_[index].value = sum / static_cast<double>(rows.size());
    if (pure || depth >= params_.max_depth || rows.size() < 2 * params_.min_leaf) return index;

    const auto split = best_split(rows);
    if (!split) return index;
    const auto middle = std::partition(rows.begin(), rows.end(), [&](std::size_t r) {
      return data_.at(r, split->feature) <= split->threshold;
    });
    const auto n_left = static_cast<std::size_t>(middle - rows.begin());
    nodes_[index].feature = static_cast<std::int32_t>(split->feature);
    nodes_[index].threshold = split->threshold;
    const std::uint32_t left = grow(rows.first(n_left), depth + 1);
    const std::uint32_t right = grow(rows.subspan(n_left), depth + 1);
    nodes_[index].left = left;
    nodes_[index].right = right;
    return index;
  }

  std::span<const std::size_t> candidate_features() {
    const std::size_t m = features_.size();
    const std::size_t k = params_.feature_subset;
    if (k == 0 || k >= m) {
      std::iota(features_.begin(), features_.end(), std::size_t{0});
      return features_;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng_.below(m - i));
      std::swap(features_[i], features_[j]);
    }
    return std::span<const std::size_t>(features_).first(k);
  }

  // Lowest weighted child impurity over midpoints between consecutive
  // distinct values; the first candidate wins ties.
  std::optional<Split> best_split(std::span<const std::size_t> rows) {
    Split best;
    bool found = false;
    const std::size_t n = rows.size();
    const std::size_t min_leaf = std::max<std::size_t>(1, params_.min_leaf);
    double total_s = 0.0;
    double total_ss = 0.0;
    for (std::size_t r : rows) {
      total_s += targets_[r];
      total_ss += targets_[r] * targets_[r];
    }
    for (std::size_t feature : candidate_features()) {
      column_.clear();
      for (std::size_t r : rows) column_.emplace_back(data_.at(r, feature), targets_[r]);
      std::sort(column_.begin(), column_.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      double left_s = 0.0;
      double left_ss = 0.0;
      for (std::size_t i = 1; i < n; ++i) {
        const double t = column_[i - 1].second;
        left_s += t;
        left_ss += t * t;
        if (column_[i - 1].first == column_[i].first) continue;
        if (i < min_leaf || n - i < min_leaf) continue;
        const double impurity =
            weighted_impurity(static_cast<double>(i), left_s, left_ss) +
            weighted_impurity(static_cast<double>(n - i), total_s - left_s, total_ss - left_ss);
        if (impurity < best.impurity) {
          const double lo = column_[i - 1].first;
          const double hi = column_[i].first;
          double threshold = lo + (hi - lo) / 2.0;
          if (!(threshold < hi)) threshold = lo;
          best = {feature, threshold, impurity};
          found = true;
        }
      }
    }
    if (!found) return std::nullopt;
    return best;
  }

  const Dataset& data_;
  std::span<const double> targets_;
  TreeParams params_;
  Rng rng_;
  std::vector<std::size_t> features_;
  std::vector<std::pair<double, double>> column_;
  std::vector<TreeNode> nodes_;
};

}  // namespace detail

/// Fits a tree to arbitrary real targets over the given rows (repeats allowed).
inline DecisionTree train_tree(const Dataset& d, std::span<const double> targets,
                               std::vector<std::size_t> rows, const TreeParams& params) {
  if (rows.empty()) detail::fail(ErrorKind::kMalformedInput, "cannot grow a tree on zero rows");
  if (targets.size() != d.rows()) detail::fail(ErrorKind::kMalformedInput, "target count mismatch");
  return detail::TreeBuilder(d, targets, params).build(std::move(rows));
}

/// Fits a tree to the dataset labels.
inline DecisionTree train_tree(const Dataset& d, const TreeParams& params) {
  detail::require_rows(d);
  std::vector<double> targets(d.labels().begin(), d.labels().end());
  std::vector<std::size_t> rows(d.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return train_tree(d, targets, std::move(rows), params);
}

}  // namespace linkpred
