#pragma once

// Train/test/validation edge splits with sampled negatives.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

struct SplitRatios {
  double train = 0.8;
  double test = 0.1;
  double valid = 0.1;

  void validate() const {
    if (!(train > 0.0 && test > 0.0 && valid > 0.0)) {
      detail::fail(ErrorKind::kInvalidParameter, "split ratios must all be positive");
    }
    if (std::abs(train + test + valid - 1.0) > 1e-9) {
      detail::fail(ErrorKind::kInvalidParameter, "split ratios must sum to 1");
    }
  }

  friend bool operator==(const SplitRatios&, const SplitRatios&) = default;
};

struct EdgeSplit {
  Graph train_graph;
  std::vector<NodePair> train_pos;
  std::vector<NodePair> test_pos;
  std::vector<NodePair> valid_pos;
  std::vector<NodePair> train_neg;
  std::vector<NodePair> test_neg;
  std::vector<NodePair> valid_neg;
  std::uint64_t seed = 0;
  SplitRatios ratios;
  double negative_ratio = 1.0;
};

/// Edge with the timestamp used by the temporal split.
struct TimedEdge {
  NodePair pair;
  double timestamp = 0.0;
};

using PairSet = std::unordered_set<std::uint64_t>;

/// Distinct node pairs that are neither edges of g nor members of exclude,
/// drawn uniformly by rejection. When the request is large relative to the
/// pool, the pool is enumerated and drawn from instead.
inline std::vector<NodePair> sample_negatives(const Graph& g, std::size_t count, std::uint64_t seed,
                                              const PairSet& exclude = {}) {
  const std::uint64_t n = g.node_count();
  const std::uint64_t total_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::uint64_t excluded_non_edges = 0;
  for (std::uint64_t key : exclude) {
    const auto u = static_cast<NodeId>(key >> 32);
    const auto v = static_cast<NodeId>(key & 0xffffffffU);
    if (u < v && v < n && !g.has_edge(u, v)) ++excluded_non_edges;
  }
  const std::uint64_t pool = total_pairs - g.edge_count() - excluded_non_edges;
  if (count > pool) {
    detail::fail(ErrorKind::kExhausted, "requested " + std::to_string(count) +
                                            " negatives but only " + std::to_string(pool) +
                                            " candidate non-edges exist");
  }
  std::vector<NodePair> out;
  out.reserve(count);
  if (count == 0) return out;
  Rng rng(seed);

  if (2 * count <= pool) {
    // At least half of the pool stays free, so each draw succeeds with
    // probability >= pool / (2 * total_pairs); the attempt cap only guards
    // very dense graphs.
    PairSet taken;
    const std::uint64_t max_attempts = 64 * total_pairs / std::max<std::uint64_t>(pool, 1) * count + 1024;
    for (std::uint64_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
      const auto a = static_cast<NodeId>(rng.below(n));
      const auto b = static_cast<NodeId>(rng.below(n));
      if (a == b) continue;
      const NodePair p = NodePair{a, b}.canonical();
      const std::uint64_t key = pair_key(p);
      if (g.has_edge(p.u, p.v) || exclude.contains(key) || taken.contains(key)) continue;
      taken.insert(key);
      out.push_back(p);
    }
    if (out.size() == count) return out;
    out.clear();
  }

  std::vector<NodePair> candidates;
  candidates.reserve(pool);
  for (NodeId u = 0; u < n; ++u) {
    const auto row = g.neighbors(u);
    auto it = std::upper_bound(row.begin(), row.end(), u);
    for (NodeId v = u + 1; v < n; ++v) {
      while (it != row.end() && *it < v) ++it;
      if (it != row.end() && *it == v) continue;
      if (exclude.contains(pair_key({u, v}))) continue;
      candidates.push_back({u, v});
    }
  }
  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
  }
  out.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count));
  return out;
}

namespace detail {

inline std::size_t portion(double ratio, std::size_t total) {
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(total) + 1e-9));
}

inline std::size_t negative_count(double negative_ratio, std::size_t positives) {
  return static_cast<std::size_t>(std::llround(negative_ratio * static_cast<double>(positives)));
}

/// Shared tail of both split flavours. `ordered` lists the edges with the
/// test block first, then validation, then train.
inline EdgeSplit assemble_split(const Graph& g, std::vector<NodePair> ordered, std::size_t n_test,
                                std::size_t n_valid, SplitRatios ratios, std::uint64_t seed,
                                double negative_ratio) {
  EdgeSplit split;
  split.seed = seed;
  split.ratios = ratios;
  split.negative_ratio = negative_ratio;
  const auto begin = ordered.begin();
  split.test_pos.assign(begin, begin + static_cast<std::ptrdiff_t>(n_test));
  split.valid_pos.assign(begin + static_cast<std::ptrdiff_t>(n_test),
                         begin + static_cast<std::ptrdiff_t>(n_test + n_valid));
  split.train_pos.assign(begin + static_cast<std::ptrdiff_t>(n_test + n_valid), ordered.end());
  std::sort(split.test_pos.begin(), split.test_pos.end());
  std::sort(split.valid_pos.begin(), split.valid_pos.end());
  std::sort(split.train_pos.begin(), split.train_pos.end());
  split.train_graph = build_graph(split.train_pos, g.node_count());

  PairSet used;
  auto draw = [&](std::size_t positives, std::uint64_t stream) {
    auto negatives = sample_negatives(g, negative_count(negative_ratio, positives),
                                      derive_seed(seed, stream), used);
    for (const NodePair& p : negatives) used.insert(pair_key(p));
    std::sort(negatives.begin(), negatives.end());
    return negatives;
  };
  split.test_neg = draw(split.test_pos.size(), 1);
  split.valid_neg = draw(split.valid_pos.size(), 2);
  split.train_neg = draw(split.train_pos.size(), 3);
  return split;
}

inline void check_split_inputs(std::size_t edge_count, SplitRatios ratios, double negative_ratio) {
  ratios.validate();
  if (!(negative_ratio > 0.0) || !std::isfinite(negative_ratio)) {
    fail(ErrorKind::kInvalidParameter, "negative ratio must be positive");
  }
  if (edge_count < 10) {
    fail(ErrorKind::kTooSmall, "graph has " + std::to_string(edge_count) + " edges; need at least 10");
  }
}

}  // namespace detail

/// Random split: edges are shuffled with the seeded PRNG, then the first
/// floor(test * E) become test positives, the next floor(valid * E)
/// validation positives, and the remainder train. Negatives are sampled
/// from non-edges of g at `negative_ratio` per positive, disjoint across
/// the three sets.
inline EdgeSplit split_edges(const Graph& g, SplitRatios ratios, std::uint64_t seed,
                             double negative_ratio = 1.0) {
  detail::check_split_inputs(g.edge_count(), ratios, negative_ratio);
  std::vector<NodePair> edges = g.edges();
  Rng rng(derive_seed(seed, 0));
  shuffle(std::span<NodePair>(edges), rng);
  const std::size_t n_test = detail::portion(ratios.test, edges.size());
  const std::size_t n_valid = detail::portion(ratios.valid, edges.size());
  return detail::assemble_split(g, std::move(edges), n_test, n_valid, ratios, seed, negative_ratio);
}

/// Temporal split: the earliest edges train, later ones test, the latest
/// validate. A repeated edge keeps its earliest timestamp; equal timestamps
/// order by canonical pair.
inline EdgeSplit split_edges_temporal(std::span<const TimedEdge> timed, std::size_t node_count,
                                      SplitRatios ratios, std::uint64_t seed,
                                      double negative_ratio = 1.0,
                                      SelfLoopPolicy policy = SelfLoopPolicy::kStrict) {
  std::vector<TimedEdge> edges;
  edges.reserve(timed.size());
  for (const TimedEdge& e : timed) {
    if (e.pair.u == e.pair.v && policy == SelfLoopPolicy::kSkip) continue;
    edges.push_back({e.pair.canonical(), e.timestamp});
  }
  std::vector<NodePair> plain;
  plain.reserve(edges.size());
  for (const TimedEdge& e : edges) plain.push_back(e.pair);
  const Graph g = build_graph(plain, node_count, policy);
  detail::check_split_inputs(g.edge_count(), ratios, negative_ratio);

  std::sort(edges.begin(), edges.end(), [](const TimedEdge& a, const TimedEdge& b) {
    if (a.pair != b.pair) return a.pair < b.pair;
    return a.timestamp < b.timestamp;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const TimedEdge& a, const TimedEdge& b) { return a.pair == b.pair; }),
              edges.end());
  std::sort(edges.begin(), edges.end(), [](const TimedEdge& a, const TimedEdge& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.pair < b.pair;
  });
  const std::size_t n_test = detail::portion(ratios.test, edges.size());
  const std::size_t n_valid = detail::portion(ratios.valid, edges.size());
  const std::size_t n_train = edges.size() - n_test - n_valid;
  // Chronological order is train, test, valid; assemble_split wants test,
  // valid, train.
  std::vector<NodePair> ordered;
  ordered.reserve(edges.size());
  for (std::size_t i = n_train; i < edges.size(); ++i) ordered.push_back(edges[i].pair);
  for (std::size_t i = 0; i < n_train; ++i) ordered.push_back(edges[i].pair);
  return detail::assemble_split(g, std::move(ordered), n_test, n_valid, ratios, seed, negative_ratio);
}

}  // namespace linkpred
