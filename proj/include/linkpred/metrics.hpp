#pragma once

// Ranking and classification metrics over scored pairs.
//
// Ranking order everywhere: descending score, ties broken by ascending
// (u, v). AUC is tie-aware (a tied positive/negative pair counts one half)
// and does not depend on the tie-break.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"

namespace linkpred {

struct LabeledPair {
  NodeId u = 0;
  NodeId v = 0;
  int label = 0;  // 1 = link

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct ScoredPair {
  NodeId u = 0;
  NodeId v = 0;
  double score = 0.0;
  int label = 0;

  friend bool operator==(const ScoredPair&, const ScoredPair&) = default;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;

  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct ClassificationReport {
  ClassMetrics negative;  // class 0
  ClassMetrics positive;  // class 1
  double accuracy = 0.0;
};

namespace detail {

struct LabelCounts {
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

inline LabelCounts count_labels(std::span<const ScoredPair> scored) {
  LabelCounts c;
  for (const ScoredPair& s : scored) {
    if (!std::isfinite(s.score)) fail(ErrorKind::kMalformedInput, "non-finite score");
    if (s.label == 1) {
      ++c.positives;
    } else if (s.label == 0) {
      ++c.negatives;
    } else {
      fail(ErrorKind::kMalformedInput, "label must be 0 or 1, got " + std::to_string(s.label));
    }
  }
  return c;
}

inline LabelCounts require_both_classes(std::span<const ScoredPair> scored) {
  const LabelCounts c = count_labels(scored);
  if (c.positives == 0 || c.negatives == 0) {
    fail(ErrorKind::kDegenerateLabels, "need at least one positive and one negative label");
  }
  return c;
}

/// Calls visit(positives_in_group, negatives_in_group) once per group of
/// equal scores, from the highest score down.
template <typename Visit>
void for_each_score_group(std::span<const ScoredPair> scored, Visit&& visit) {
  std::vector<ScoredPair> sorted(scored.begin(), scored.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredPair& a, const ScoredPair& b) { return a.score > b.score; });
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t pos = 0;
    std::size_t neg = 0;
    const double score = sorted[i].score;
    for (; i < sorted.size() && sorted[i].score == score; ++i) {
      (sorted[i].label == 1 ? pos : neg) += 1;
    }
    visit(pos, neg);
  }
}

}  // namespace detail

/// Copy of `scored` in ranking order.
inline std::vector<ScoredPair> ranked(std::span<const ScoredPair> scored) {
  std::vector<ScoredPair> out(scored.begin(), scored.end());
  std::sort(out.begin(), out.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return out;
}

/// Probability that a random positive outranks a random negative, ties
/// counted as one half (normalized Mann-Whitney U).
inline double auc_roc(std::span<const ScoredPair> scored) {
  const auto counts = detail::require_both_classes(scored);
  // Twice U, accumulated in integers so the result is exact up to the final division.
  std::uint64_t twice_u = 0;
  std::uint64_t negatives_below = counts.negatives;
  detail::for_each_score_group(scored, [&](std::size_t pos, std::size_t neg) {
    negatives_below -= neg;
    twice_u += 2 * pos * negatives_below + pos * neg;
  });
  return static_cast<double>(twice_u) /
         (2.0 * static_cast<double>(counts.positives) * static_cast<double>(counts.negatives));
}

/// Fraction of the top k ranked pairs that are links.
inline double precision_at_k(std::span<const ScoredPair> scored, std::size_t k) {
  detail::count_labels(scored);
  if (k < 1 || k > scored.size()) {
    detail::fail(ErrorKind::kInvalidParameter,
                 "k must lie in [1," + std::to_string(scored.size()) + "], got " + std::to_string(k));
  }
  const auto order = ranked(scored);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) hits += order[i].label == 1;
  return static_cast<double>(hits) / static_cast<double>(k);
}

/// Average precision: mean over positives of the precision at their rank.
inline double aupr(std::span<const ScoredPair> scored) {
  const auto counts = detail::count_labels(scored);
  if (counts.positives == 0) detail::fail(ErrorKind::kDegenerateLabels, "no positive labels");
  const auto order = ranked(scored);
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (order[rank].label != 1) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
  }
  return sum / static_cast<double>(counts.positives);
}

/// ROC staircase from (0,0) to (1,1), one vertex per distinct score
/// threshold. Interior vertices that lie on a straight horizontal or vertical
/// run are dropped, so a perfect ranking yields (0,0), (0,1), (1,1).
inline std::vector<RocPoint> roc_points(std::span<const ScoredPair> scored) {
  const auto counts = detail::require_both_classes(scored);
  const auto p = static_cast<double>(counts.positives);
  const auto n = static_cast<double>(counts.negatives);
  std::vector<RocPoint> all{{0.0, 0.0}};
  std::size_t tp = 0;
  std::size_t fp = 0;
  detail::for_each_score_group(scored, [&](std::size_t pos, std::size_t neg) {
    tp += pos;
    fp += neg;
    all.push_back({static_cast<double>(fp) / n, static_cast<double>(tp) / p});
  });
  std::vector<RocPoint> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0 && i + 1 < all.size()) {
      const RocPoint& prev = out.back();
      const RocPoint& next = all[i + 1];
      const bool vertical = prev.fpr == all[i].fpr && all[i].fpr == next.fpr;
      const bool horizontal = prev.tpr == all[i].tpr && all[i].tpr == next.tpr;
      if (vertical || horizontal) continue;
    }
    out.push_back(all[i]);
  }
  return out;
}

/// Area under a polyline by the trapezoid rule.
inline double trapezoid_area(std::span<const RocPoint> points) {
  double area = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    area += (points[i].fpr - points[i - 1].fpr) * (points[i].tpr + points[i - 1].tpr) / 2.0;
  }
  return area;
}

/// Per-class precision, recall and F1 (0 whenever a denominator is 0) plus
/// overall accuracy.
inline ClassificationReport classification_report(std::span<const int> predicted,
                                                  std::span<const int> actual) {
  if (predicted.size() != actual.size()) {
    detail::fail(ErrorKind::kMalformedInput, "predicted and actual label counts differ (" +
                                                 std::to_string(predicted.size()) + " vs " +
                                                 std::to_string(actual.size()) + ")");
  }
  if (actual.empty()) detail::fail(ErrorKind::kMalformedInput, "no labels to report on");
  // confusion[actual][predicted]
  std::size_t confusion[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if ((predicted[i] != 0 && predicted[i] != 1) || (actual[i] != 0 && actual[i] != 1)) {
      detail::fail(ErrorKind::kMalformedInput, "labels must be 0 or 1");
    }
    ++confusion[actual[i]][predicted[i]];
  }
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  auto metrics_for = [&](int c) {
    ClassMetrics m;
    const std::size_t tp = confusion[c][c];
    const std::size_t predicted_c = confusion[0][c] + confusion[1][c];
    m.support = confusion[c][0] + confusion[c][1];
    m.precision = ratio(tp, predicted_c);
    m.recall = ratio(tp, m.support);
    m.f1 = m.precision + m.recall == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
  };
  ClassificationReport report;
  report.negative = metrics_for(0);
  report.positive = metrics_for(1);
  report.accuracy = ratio(confusion[0][0] + confusion[1][1], actual.size());
  return report;
}

}  // namespace linkpred
