#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkpred/error.hpp"

namespace linkpred {

using NodeId = std::uint32_t;

/// An unordered node pair as it appears in edge lists and candidate lists.
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  /// (min, max) form; two pairs denote the same undirected edge iff their
  /// canonical forms are equal.
  constexpr NodePair canonical() const noexcept {
    return u <= v ? NodePair{u, v} : NodePair{v, u};
  }

  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

inline std::uint64_t pair_key(NodePair p) noexcept {
  const NodePair c = p.canonical();
  return (static_cast<std::uint64_t>(c.u) << 32) | c.v;
}

/// Hop count between two nodes, or unreachable.
class Distance {
 public:
  static constexpr Distance unreachable() noexcept { return Distance(); }
  static constexpr Distance hops(std::uint32_t n) noexcept { return Distance(n); }

  constexpr bool reachable() const noexcept { return value_ != kUnreachable; }
  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr bool operator==(Distance, Distance) = default;

 private:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
  constexpr Distance() noexcept = default;
  constexpr explicit Distance(std::uint32_t v) noexcept : value_(v) {}
  std::uint32_t value_ = kUnreachable;
};

/// Whether a pair query sees the edge joining the pair itself. Scoring a
/// pair that is already an edge "as a candidate" hides that one edge, so
/// training positives are scored the way unseen test positives are.
enum class EdgeVisibility { kAsIs, kHideDirectEdge };

enum class SelfLoopPolicy { kStrict, kSkip };

struct BuildStats {
  std::size_t skipped_self_loops = 0;
  std::size_t duplicate_edges = 0;
};

class Graph;
Graph build_graph(std::span<const NodePair> edges, std::size_t node_count,
                  SelfLoopPolicy policy, BuildStats& stats);

/// Immutable undirected simple graph in compressed sparse row form. Each
/// adjacency row is sorted ascending and duplicate-free.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const {
    check_node(u);
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }

  std::size_t degree(NodeId u) const {
    check_node(u);
    return offsets_[u + 1] - offsets_[u];
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(v);
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Sorted intersection of the two neighborhoods.
  std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const {
    check_pair(u, v);
    const auto a = neighbors(u);
    const auto b = neighbors(v);
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  std::size_t common_neighbor_count(NodeId u, NodeId v) const {
    check_pair(u, v);
    const auto a = neighbors(u);
    const auto b = neighbors(v);
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++count;
        ++i;
        ++j;
      }
    }
    return count;
  }

  /// Unweighted BFS distance. With kHideDirectEdge the edge {u, v} (if any)
  /// is ignored during the search.
  Distance shortest_path_length(NodeId u, NodeId v,
                                EdgeVisibility visibility = EdgeVisibility::kAsIs) const {
    check_node(u);
    check_node(v);
    if (u == v) return Distance::hops(0);
    const bool hide = visibility == EdgeVisibility::kHideDirectEdge;
    constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(node_count(), kUnseen);
    std::vector<NodeId> frontier{u};
    std::vector<NodeId> next;
    dist[u] = 0;
    std::uint32_t depth = 0;
    while (!frontier.empty()) {
      ++depth;
      next.clear();
      for (NodeId x : frontier) {
        for (NodeId y : neighbors(x)) {
          if (dist[y] != kUnseen) continue;
          if (hide && x == u && y == v) continue;
          if (y == v) return Distance::hops(depth);
          dist[y] = depth;
          next.push_back(y);
        }
      }
      frontier.swap(next);
    }
    return Distance::unreachable();
  }

  /// All edges in canonical form, ascending.
  std::vector<NodePair> edges() const {
    std::vector<NodePair> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
      for (NodeId v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::span<const NodePair>, std::size_t, SelfLoopPolicy, BuildStats&);

  void check_node(NodeId u) const {
    if (u >= node_count()) {
      detail::fail(ErrorKind::kMalformedInput,
                   "node " + std::to_string(u) + " out of range (node count " +
                       std::to_string(node_count()) + ")");
    }
  }

  void check_pair(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u == v) detail::fail(ErrorKind::kInvalidPair, "pair endpoints coincide: " + std::to_string(u));
  }

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

/// Builds a graph from an undirected edge list. Duplicate edges (in either
/// orientation) collapse to one. Self-loops throw under kStrict and are
/// counted and dropped under kSkip.
inline Graph build_graph(std::span<const NodePair> edges, std::size_t node_count,
                         SelfLoopPolicy policy, BuildStats& stats) {
  if (node_count > std::numeric_limits<NodeId>::max()) {
    detail::fail(ErrorKind::kMalformedInput, "node count exceeds NodeId range");
  }
  stats = {};
  std::vector<NodePair> canonical;
  canonical.reserve(edges.size());
  for (const NodePair& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      detail::fail(ErrorKind::kMalformedInput,
                   "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside [0," + std::to_string(node_count) + ")");
    }
    if (e.u == e.v) {
      if (policy == SelfLoopPolicy::kStrict) {
        detail::fail(ErrorKind::kMalformedInput, "self-loop on node " + std::to_string(e.u));
      }
      ++stats.skipped_self_loops;
      continue;
    }
    canonical.push_back(e.canonical());
  }
  std::sort(canonical.begin(), canonical.end());
  const auto last = std::unique(canonical.begin(), canonical.end());
  stats.duplicate_edges = static_cast<std::size_t>(canonical.end() - last);
  canonical.erase(last, canonical.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const NodePair& e : canonical) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i <= node_count; ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.adjacency_.resize(canonical.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical edges are sorted by (u, v), so filling in this order leaves each
  // row sorted: row x first receives its smaller neighbors (as the v side of
  // edges (w, x), ordered by w) and then its larger ones (as the u side).
  for (const NodePair& e : canonical) g.adjacency_[cursor[e.v]++] = e.u;
  for (const NodePair& e : canonical) g.adjacency_[cursor[e.u]++] = e.v;
  return g;
}

inline Graph build_graph(std::span<const NodePair> edges, std::size_t node_count,
                         SelfLoopPolicy policy = SelfLoopPolicy::kStrict) {
  BuildStats stats;
  return build_graph(edges, node_count, policy, stats);
}

}  // namespace linkpred
