#pragma once

// Two-level stacking: SVM, gradient boosting and random forest base models,
// a random forest meta model over their out-of-fold scores.

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "linkpred/boosting.hpp"
#include "linkpred/dataset.hpp"
#include "linkpred/error.hpp"
#include "linkpred/forest.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/svm.hpp"

namespace linkpred {

inline constexpr std::size_t kBaseModelCount = 3;

struct StackingParams {
  std::size_t folds = 5;
  SvmParams svm;
  BoostingParams boosting;
  ForestParams forest;
  ForestParams meta;
  std::uint64_t seed = 0;

  friend bool operator==(const StackingParams&, const StackingParams&) = default;
};

struct StackingModel {
  LinearSvmModel svm;
  GradientBoostingModel boosting;
  RandomForestModel forest;
  RandomForestModel meta;
  StackingParams params;

  std::size_t dims() const noexcept { return svm.dims(); }

  /// Meta-model input: [svm margin, boosting raw output, forest probability].
  std::array<double, kBaseModelCount> base_scores(std::span<const double> x) const {
    return {svm.score(x), boosting.raw(x), forest.probability(x)};
  }

  friend bool operator==(const StackingModel&, const StackingModel&) = default;
};

inline std::vector<std::string> stacking_meta_feature_names() { return {"svm", "gb", "rf"}; }

/// Diagnostics from stacking training.
struct StackingTrace {
  /// One row per training row (same order): out-of-fold base scores.
  Dataset meta;
  std::vector<std::size_t> fold_of;
};

namespace detail {

inline SvmParams reseeded(SvmParams p, std::uint64_t seed) {
  p.seed = seed;
  return p;
}
inline BoostingParams reseeded(BoostingParams p, std::uint64_t seed) {
  p.seed = seed;
  return p;
}
inline ForestParams reseeded(ForestParams p, std::uint64_t seed) {
  p.seed = seed;
  return p;
}

}  // namespace detail

/// Rows are shuffled with derive_seed(seed, 0) and dealt round-robin into
/// folds. For fold f, base models trained on the other folds (seeds from
/// stream 1 + f) score the rows of f. The meta forest trains on those scores,
/// and the base models are finally refit on all rows (stream 1 + folds).
/// The meta forest uses stream 2 + folds; per-model seeds inside `params`
/// are ignored in favour of `params.seed`.
inline StackingModel train_stacking(const Dataset& d, const StackingParams& params,
                                    StackingTrace* trace = nullptr) {
  detail::require_rows(d);
  if (params.folds < 2) detail::fail(ErrorKind::kInvalidParameter, "stacking needs at least 2 folds");
  if (params.folds > d.rows()) detail::fail(ErrorKind::kDegenerateFold, "more folds than rows");
  const std::size_t n = d.rows();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(params.seed, 0));
  shuffle(std::span<std::size_t>(order), rng);
  std::vector<std::size_t> fold_of(n);
  for (std::size_t i = 0; i < n; ++i) fold_of[order[i]] = i % params.folds;

  std::vector<std::vector<std::size_t>> in_fold(params.folds);
  for (std::size_t i = 0; i < n; ++i) in_fold[fold_of[i]].push_back(i);
  for (std::size_t f = 0; f < params.folds; ++f) {
    std::size_t pos = 0;
    for (std::size_t i : in_fold[f]) pos += static_cast<std::size_t>(d.label(i));
    if (pos == 0 || pos == in_fold[f].size()) {
      detail::fail(ErrorKind::kDegenerateFold, "fold " + std::to_string(f) + " lacks a class");
    }
  }

  auto fit_bases = [&](const Dataset& train, std::uint64_t seed, StackingModel& into) {
    into.svm = train_svm(train, detail::reseeded(params.svm, derive_seed(seed, 0)));
    into.boosting = train_gradient_boosting(train, detail::reseeded(params.boosting, derive_seed(seed, 1)));
    into.forest = train_random_forest(train, detail::reseeded(params.forest, derive_seed(seed, 2)));
  };

  std::vector<std::array<double, kBaseModelCount>> oof(n);
  for (std::size_t f = 0; f < params.folds; ++f) {
    std::vector<std::size_t> rest;
    rest.reserve(n - in_fold[f].size());
    for (std::size_t i = 0; i < n; ++i) {
      if (fold_of[i] != f) rest.push_back(i);
    }
    StackingModel fold_model;
    fit_bases(d.subset(rest), derive_seed(params.seed, 1 + f), fold_model);
    for (std::size_t i : in_fold[f]) oof[i] = fold_model.base_scores(d.row(i));
  }

  Dataset meta(stacking_meta_feature_names());
  for (std::size_t i = 0; i < n; ++i) meta.add(oof[i], d.label(i));

  StackingModel model;
  model.params = params;
  model.meta = train_random_forest(meta, detail::reseeded(params.meta, derive_seed(params.seed, 2 + params.folds)));
  fit_bases(d, derive_seed(params.seed, 1 + params.folds), model);
  if (trace) {
    trace->meta = std::move(meta);
    trace->fold_of = std::move(fold_of);
  }
  return model;
}

}  // namespace linkpred
