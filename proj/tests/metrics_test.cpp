#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "linkpred/metrics.hpp"
#include "test_support.hpp"

namespace linkpred {
namespace {

using testing::pairwise_auc;
using testing::random_scored;

std::vector<ScoredPair> from_scores(const std::vector<double>& scores, const std::vector<int>& labels) {
  std::vector<ScoredPair> out;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), scores[i], labels[i]});
  }
  return out;
}

std::vector<ScoredPair> mapped(std::vector<ScoredPair> s, auto&& f) {
  for (ScoredPair& p : s) p.score = f(p.score);
  return s;
}

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kMalformedInput;
}

TEST(Ranked, TiesBreakByPair) {
  const std::vector<ScoredPair> s = {{3, 4, 1.0, 0}, {1, 9, 1.0, 1}, {1, 2, 1.0, 0}, {0, 5, 2.0, 0}};
  const auto r = ranked(s);
  EXPECT_EQ(r[0].u, 0U);
  EXPECT_EQ(r[1].v, 2U);
  EXPECT_EQ(r[2].v, 9U);
  EXPECT_EQ(r[3].u, 3U);
}

TEST(AucRoc, PerfectAndAllTied) {
  EXPECT_EQ(auc_roc(from_scores({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0})), 1.0);
  EXPECT_EQ(auc_roc(from_scores({0.5, 0.5, 0.5, 0.5}, {1, 0, 1, 0})), 0.5);
}

TEST(AucRoc, MatchesPairwiseOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int ties : {0, 3, 10}) {
      const auto s = random_scored(200, seed, ties);
      EXPECT_NEAR(auc_roc(s), pairwise_auc(s), 1e-12);
    }
  }
}

TEST(AucRoc, SingleClassIsDegenerate) {
  const auto s = from_scores({0.1, 0.2}, {1, 1});
  EXPECT_EQ(kind_of([&] { auc_roc(s); }), ErrorKind::kDegenerateLabels);
  EXPECT_EQ(kind_of([&] { roc_points(s); }), ErrorKind::kDegenerateLabels);
}

TEST(AucRoc, MonotoneTransformAndNegation) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = random_scored(150, 40 + seed);
    const double auc = auc_roc(s);
    EXPECT_EQ(auc_roc(mapped(s, [](double x) { return std::exp(3 * x) - 7; })), auc);
    EXPECT_NEAR(auc_roc(mapped(s, [](double x) { return -x; })), 1.0 - auc, 1e-12);
  }
}

TEST(PrecisionAtK, AllPositives) {
  EXPECT_EQ(precision_at_k(from_scores({0.3, 0.2, 0.9}, {1, 1, 1}), 3), 1.0);
}

TEST(PrecisionAtK, HandRankedList) {
  // Descending order of scores gives labels 1 0 1 1 0 0 1 0 0 0.
  const std::vector<double> scores = {0.1, 0.95, 0.5, 0.8, 0.85, 0.3, 0.2, 0.6, 0.7, 0.4};
  const std::vector<int> labels = {0, 1, 0, 1, 0, 0, 0, 1, 1, 0};
  const auto s = from_scores(scores, labels);
  EXPECT_DOUBLE_EQ(precision_at_k(s, 1), 1.0);
  EXPECT_DOUBLE_EQ(precision_at_k(s, 2), 0.5);
  EXPECT_DOUBLE_EQ(precision_at_k(s, 4), 0.75);
  EXPECT_DOUBLE_EQ(precision_at_k(s, 7), 4.0 / 7.0);
  EXPECT_DOUBLE_EQ(precision_at_k(s, 10), 0.4);
}

TEST(PrecisionAtK, OutOfRange) {
  const auto s = from_scores({0.3, 0.2}, {1, 0});
  EXPECT_EQ(kind_of([&] { precision_at_k(s, 0); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([&] { precision_at_k(s, 3); }), ErrorKind::kInvalidParameter);
}

TEST(Aupr, PerfectAndSinglePositiveLast) {
  EXPECT_EQ(aupr(from_scores({0.9, 0.8, 0.2}, {1, 1, 0})), 1.0);
  EXPECT_DOUBLE_EQ(aupr(from_scores({0.9, 0.8, 0.7, 0.1}, {0, 0, 0, 1})), 0.25);
  EXPECT_EQ(kind_of([] { aupr(from_scores({0.9}, {0})); }), ErrorKind::kDegenerateLabels);
}

TEST(Aupr, MatchesStepSumOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = random_scored(100, 500 + seed, seed % 2 == 0 ? 0 : 5);
    // Oracle sorts independently with the documented tie rule.
    auto order = s;
    std::sort(order.begin(), order.end(), [](const ScoredPair& a, const ScoredPair& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.u != b.u) return a.u < b.u;
      return a.v < b.v;
    });
    double hits = 0;
    double sum = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i].label == 1) {
        hits += 1;
        sum += hits / static_cast<double>(i + 1);
      }
    }
    EXPECT_NEAR(aupr(s), sum / hits, 1e-12);
  }
}

TEST(Aupr, RankingOnly) {
  const auto s = random_scored(120, 8);
  EXPECT_EQ(aupr(mapped(s, [](double x) { return 10 * x + 1; })), aupr(s));
  EXPECT_EQ(precision_at_k(mapped(s, [](double x) { return x * x * x; }), 20), precision_at_k(s, 20));
}

TEST(RocPoints, PerfectSeparation) {
  const auto pts = roc_points(from_scores({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0}));
  EXPECT_EQ(pts, (std::vector<RocPoint>{{0, 0}, {0, 1}, {1, 1}}));
}

TEST(RocPoints, AllTiesIsDiagonal) {
  const auto pts = roc_points(from_scores({0.5, 0.5, 0.5}, {1, 0, 1}));
  EXPECT_EQ(pts, (std::vector<RocPoint>{{0, 0}, {1, 1}}));
}

TEST(RocPoints, StaircaseWithTrapezoidEqualToAuc) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_scored(200, 900 + seed, seed % 3 == 0 ? 4 : 0);
    const auto pts = roc_points(s);
    ASSERT_GE(pts.size(), 2U);
    EXPECT_EQ(pts.front(), (RocPoint{0, 0}));
    EXPECT_EQ(pts.back(), (RocPoint{1, 1}));
    for (std::size_t i = 1; i < pts.size(); ++i) {
      EXPECT_GE(pts[i].fpr, pts[i - 1].fpr);
      EXPECT_GE(pts[i].tpr, pts[i - 1].tpr);
    }
    EXPECT_NEAR(trapezoid_area(pts), auc_roc(s), 1e-12);
  }
}

TEST(ClassificationReport, Identical) {
  const std::vector<int> y = {0, 1, 1, 0, 1};
  const auto r = classification_report(y, y);
  EXPECT_EQ(r.accuracy, 1.0);
  for (const ClassMetrics* c : {&r.negative, &r.positive}) {
    EXPECT_EQ(c->precision, 1.0);
    EXPECT_EQ(c->recall, 1.0);
    EXPECT_EQ(c->f1, 1.0);
  }
  EXPECT_EQ(r.negative.support, 2U);
  EXPECT_EQ(r.positive.support, 3U);
}

TEST(ClassificationReport, AllPredictedPositive) {
  const std::vector<int> predicted = {1, 1, 1, 1};
  const std::vector<int> actual = {1, 0, 1, 0};
  const auto r = classification_report(predicted, actual);
  EXPECT_EQ(r.positive.precision, 0.5);
  EXPECT_EQ(r.positive.recall, 1.0);
  EXPECT_EQ(r.negative.recall, 0.0);
  EXPECT_EQ(r.negative.precision, 0.0);
  EXPECT_EQ(r.negative.f1, 0.0);
  EXPECT_DOUBLE_EQ(r.positive.f1, 2.0 / 3.0);
  EXPECT_EQ(r.accuracy, 0.5);
}

TEST(ClassificationReport, AccuracyIsExactConfusionRatio) {
  Rng rng(5);
  std::vector<int> p(97);
  std::vector<int> a(97);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = static_cast<int>(rng.below(2));
    a[i] = static_cast<int>(rng.below(2));
    agree += p[i] == a[i] ? 1 : 0;
  }
  EXPECT_EQ(classification_report(p, a).accuracy, static_cast<double>(agree) / 97.0);
}

TEST(ClassificationReport, LengthMismatch) {
  const std::vector<int> p = {1, 0};
  const std::vector<int> a = {1};
  EXPECT_EQ(kind_of([&] { classification_report(p, a); }), ErrorKind::kMalformedInput);
}

}  // namespace
}  // namespace linkpred
