#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "linkpred/model.hpp"
#include "linkpred/stacking.hpp"

namespace linkpred {
namespace {

Dataset separated(std::size_t per_class, std::uint64_t seed) {
  Rng rng(seed);
  Dataset d(2);
  for (std::size_t i = 0; i < per_class; ++i) {
    d.add(std::vector<double>{-3 + rng.uniform(), -3 + rng.uniform()}, 0);
    d.add(std::vector<double>{3 - rng.uniform(), 3 - rng.uniform()}, 1);
  }
  return d;
}

StackingParams small_params(std::uint64_t seed) {
  StackingParams p;
  p.folds = 4;
  p.boosting.rounds = 10;
  p.forest.n_trees = 10;
  p.meta.n_trees = 10;
  p.meta.max_depth = 4;
  p.seed = seed;
  return p;
}

TEST(Stacking, MetaDatasetShape) {
  const Dataset d = separated(30, 1);
  StackingTrace trace;
  train_stacking(d, small_params(3), &trace);
  EXPECT_EQ(trace.meta.rows(), d.rows());
  EXPECT_EQ(trace.meta.dims(), 3U);
  for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_EQ(trace.meta.label(i), d.label(i));
  ASSERT_EQ(trace.fold_of.size(), d.rows());
  std::vector<std::size_t> sizes(4, 0);
  for (std::size_t f : trace.fold_of) ++sizes[f];
  for (std::size_t s : sizes) EXPECT_EQ(s, 15U);
}

TEST(Stacking, MetaRowsAreOutOfFold) {
  const Dataset d = separated(20, 2);
  const StackingParams p = small_params(7);
  StackingTrace trace;
  train_stacking(d, p, &trace);
  // Rebuild fold 0's base models on the other folds and compare.
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (trace.fold_of[i] != 0) rest.push_back(i);
  }
  const Dataset train = d.subset(rest);
  const std::uint64_t fold_seed = derive_seed(p.seed, 1);
  SvmParams svm = p.svm;
  svm.seed = derive_seed(fold_seed, 0);
  BoostingParams gb = p.boosting;
  gb.seed = derive_seed(fold_seed, 1);
  ForestParams rf = p.forest;
  rf.seed = derive_seed(fold_seed, 2);
  const LinearSvmModel s = train_svm(train, svm);
  const GradientBoostingModel g = train_gradient_boosting(train, gb);
  const RandomForestModel r = train_random_forest(train, rf);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (trace.fold_of[i] != 0) continue;
    EXPECT_EQ(trace.meta.at(i, 0), s.score(d.row(i)));
    EXPECT_EQ(trace.meta.at(i, 1), g.raw(d.row(i)));
    EXPECT_EQ(trace.meta.at(i, 2), r.probability(d.row(i)));
  }
}

TEST(Stacking, SeparableDataIsPerfect) {
  const Dataset d = separated(40, 5);
  const StackingModel m = train_stacking(d, small_params(1));
  const Dataset test = separated(40, 6);
  for (std::size_t i = 0; i < test.rows(); ++i) EXPECT_EQ(predict(m, test.row(i)).label, test.label(i));
}

TEST(Stacking, SameSeedSameMetaDataset) {
  const Dataset d = separated(25, 9);
  StackingTrace a;
  StackingTrace b;
  const StackingModel ma = train_stacking(d, small_params(4), &a);
  const StackingModel mb = train_stacking(d, small_params(4), &b);
  EXPECT_EQ(a.meta, b.meta);
  EXPECT_EQ(ma, mb);
}

TEST(Stacking, PredictionIsMetaForestOnBaseScores) {
  const Dataset d = separated(30, 12);
  const StackingModel m = train_stacking(d, small_params(2));
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const std::vector<double> x = {rng.uniform() * 8 - 4, rng.uniform() * 8 - 4};
    const std::vector<double> staged = {m.svm.score(x), m.boosting.raw(x), m.forest.probability(x)};
    EXPECT_EQ(predict(m, x), (Prediction{m.meta.vote(staged), m.meta.probability(staged)}));
  }
}

TEST(Stacking, FoldWithoutAClass) {
  Dataset d(1);
  for (int i = 0; i < 9; ++i) d.add(std::vector<double>{static_cast<double>(i)}, 0);
  d.add(std::vector<double>{9.0}, 1);
  try {
    train_stacking(d, small_params(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateFold);
  }
}

}  // namespace
}  // namespace linkpred
