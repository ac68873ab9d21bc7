#pragma once

// Neighborhood similarity indices for a candidate pair (u, v).
//
// Every index takes an EdgeVisibility. With kHideDirectEdge an existing edge
// {u, v} is treated as absent, which is how a training positive is scored.
// Only the union size, the degrees and the distance can depend on that edge;
// the common neighbors never do.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <string>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"

namespace linkpred {

/// Blend weight for common neighbor centrality; alpha in [0, 1].
class CncParams {
 public:
  static constexpr double kDefaultAlpha = 0.8;

  constexpr CncParams() = default;
  explicit CncParams(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      detail::fail(ErrorKind::kInvalidParameter,
                   "CNC alpha must lie in [0,1], got " + std::to_string(alpha));
    }
  }

  constexpr double alpha() const noexcept { return alpha_; }

 private:
  double alpha_ = kDefaultAlpha;
};

namespace detail {

inline void require_distinct(const Graph& g, NodeId u, NodeId v) {
  if (u >= g.node_count() || v >= g.node_count()) {
    fail(ErrorKind::kMalformedInput, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                         ") outside node range");
  }
  if (u == v) fail(ErrorKind::kInvalidPair, "index undefined for u == v (" + std::to_string(u) + ")");
}

inline bool hidden_edge(const Graph& g, NodeId u, NodeId v, EdgeVisibility visibility) {
  return visibility == EdgeVisibility::kHideDirectEdge && g.has_edge(u, v);
}

}  // namespace detail

inline double common_neighbor_count(const Graph& g, NodeId u, NodeId v,
                                    EdgeVisibility = EdgeVisibility::kAsIs) {
  detail::require_distinct(g, u, v);
  return static_cast<double>(g.common_neighbor_count(u, v));
}

/// |N(u) ∩ N(v)| / |N(u) ∪ N(v)|, and 0 when the union is empty.
inline double jaccard(const Graph& g, NodeId u, NodeId v,
                      EdgeVisibility visibility = EdgeVisibility::kAsIs) {
  detail::require_distinct(g, u, v);
  const std::size_t common = g.common_neighbor_count(u, v);
  std::size_t united = g.degree(u) + g.degree(v) - common;
  if (detail::hidden_edge(g, u, v, visibility)) united -= 2;
  if (united == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(united);
}

/// Sum over common neighbors w of 1 / ln(deg w), in ascending w order.
inline double adamic_adar(const Graph& g, NodeId u, NodeId v,
                          EdgeVisibility = EdgeVisibility::kAsIs) {
  detail::require_distinct(g, u, v);
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  double sum = 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      const std::size_t deg = g.degree(*i);
      // A common neighbor is adjacent to both u and v.
      assert(deg >= 2);
      sum += 1.0 / std::log(static_cast<double>(deg));
      ++i;
      ++j;
    }
  }
  return sum;
}

/// alpha * |N(u) ∩ N(v)| + (1 - alpha) * N / d(u, v). The distance term is 0
/// for unreachable pairs.
inline double common_neighbor_centrality(const Graph& g, NodeId u, NodeId v, CncParams params,
                                         EdgeVisibility visibility = EdgeVisibility::kAsIs) {
  detail::require_distinct(g, u, v);
  const double alpha = params.alpha();
  const double common = static_cast<double>(g.common_neighbor_count(u, v));
  double distance_term = 0.0;
  if (alpha < 1.0) {
    const Distance d = g.shortest_path_length(u, v, visibility);
    if (d.reachable()) distance_term = static_cast<double>(g.node_count()) / d.value();
  }
  return alpha * common + (1.0 - alpha) * distance_term;
}

}  // namespace linkpred
