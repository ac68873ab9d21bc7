#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/indices.hpp"
#include "linkpred/metrics.hpp"

namespace linkpred {

enum class IndexKind { kCommonNeighbors, kJaccard, kAdamicAdar, kCnc };

inline std::string_view index_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::kCommonNeighbors: return "cn";
    case IndexKind::kJaccard: return "jc";
    case IndexKind::kAdamicAdar: return "aai";
    case IndexKind::kCnc: return "cnc";
  }
  return "?";
}

inline std::optional<IndexKind> parse_index(std::string_view name) {
  if (name == "cn") return IndexKind::kCommonNeighbors;
  if (name == "jc") return IndexKind::kJaccard;
  if (name == "aai") return IndexKind::kAdamicAdar;
  if (name == "cnc") return IndexKind::kCnc;
  return std::nullopt;
}

/// Scores a candidate pair with one of the similarity indices. Pairs that
/// are already edges of the graph are scored with that edge hidden.
struct IndexScorer {
  IndexKind kind = IndexKind::kAdamicAdar;
  CncParams cnc;

  double operator()(const Graph& g, NodeId u, NodeId v) const {
    constexpr auto kHide = EdgeVisibility::kHideDirectEdge;
    switch (kind) {
      case IndexKind::kCommonNeighbors: return common_neighbor_count(g, u, v, kHide);
      case IndexKind::kJaccard: return jaccard(g, u, v, kHide);
      case IndexKind::kAdamicAdar: return adamic_adar(g, u, v, kHide);
      case IndexKind::kCnc: return common_neighbor_centrality(g, u, v, cnc, kHide);
    }
    return 0.0;
  }
};

/// Positives (label 1) followed by negatives (label 0).
inline std::vector<LabeledPair> labeled_pairs(std::span<const NodePair> positives,
                                              std::span<const NodePair> negatives) {
  std::vector<LabeledPair> out;
  out.reserve(positives.size() + negatives.size());
  for (const NodePair& p : positives) out.push_back({p.u, p.v, 1});
  for (const NodePair& p : negatives) out.push_back({p.u, p.v, 0});
  return out;
}

/// Order-preserving map of `scorer(g, u, v)` over `pairs`. With threads > 1
/// the input is cut into contiguous chunks, one per thread; each output slot
/// is written by exactly one thread, so the result does not depend on the
/// thread count.
template <typename Scorer>
std::vector<ScoredPair> score_pairs(const Scorer& scorer, const Graph& g,
                                    std::span<const LabeledPair> pairs, unsigned threads = 1) {
  std::vector<ScoredPair> out(pairs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const LabeledPair& p = pairs[i];
      out[i] = {p.u, p.v, scorer(g, p.u, p.v), p.label};
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1 || pairs.size() < 2 * threads) {
    work(0, pairs.size());
    return out;
  }
  const std::size_t chunk = (pairs.size() + threads - 1) / threads;
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(pairs.size(), t * chunk);
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace linkpred
