#pragma once

// Seeded synthetic graph generators. Generation is a pure function of the
// parameters and the seed; the PRNG stream order is part of the contract.
//
// ER and SBM share one stream protocol: unordered pairs (i, j), i < j, are
// visited in lexicographic order and each consumes exactly one uniform draw.
// An SBM with p_in == p_out therefore reproduces erdos_renyi bit for bit.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

enum class GeneratorKind { kErdosRenyi, kBarabasiAlbert, kStochasticBlock };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kErdosRenyi;
  std::size_t n = 0;
  double p = 0.0;          // erdos_renyi
  std::size_t m = 0;       // barabasi_albert
  std::size_t k = 1;       // stochastic_block
  double p_in = 0.0;       // stochastic_block
  double p_out = 0.0;      // stochastic_block
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

namespace detail {

inline void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorKind::kInvalidParameter, std::string(name) + " must lie in [0,1], got " + std::to_string(p));
  }
}

inline void require_node_count(std::size_t n) {
  if (n < 1) fail(ErrorKind::kInvalidParameter, "generator needs n >= 1");
  if (n > std::numeric_limits<NodeId>::max()) fail(ErrorKind::kInvalidParameter, "n exceeds NodeId range");
}

}  // namespace detail

inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  detail::require_node_count(n);
  detail::require_probability(p, "p");
  Rng rng(seed);
  std::vector<NodePair> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) edges.push_back({i, j});
    }
  }
  return build_graph(edges, n);
}

/// Round-robin block of node i among k blocks: i mod k.
inline std::vector<std::size_t> round_robin_blocks(std::size_t n, std::size_t k) {
  std::vector<std::size_t> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = i % k;
  return blocks;
}

struct BlockGraph {
  Graph graph;
  std::vector<std::size_t> blocks;
};

inline BlockGraph stochastic_block(std::size_t n, std::size_t k, double p_in, double p_out,
                                   std::uint64_t seed) {
  detail::require_node_count(n);
  if (k < 1 || k > n) {
    detail::fail(ErrorKind::kInvalidParameter, "block count must satisfy 1 <= k <= n");
  }
  detail::require_probability(p_in, "p_in");
  detail::require_probability(p_out, "p_out");
  BlockGraph out;
  out.blocks = round_robin_blocks(n, k);
  Rng rng(seed);
  std::vector<NodePair> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double p = out.blocks[i] == out.blocks[j] ? p_in : p_out;
      if (rng.uniform() < p) edges.push_back({i, j});
    }
  }
  out.graph = build_graph(edges, n);
  return out;
}

/// Preferential attachment grown from an m-clique. Each new node picks m
/// distinct targets with probability proportional to current degree, by
/// rejection on a degree-weighted endpoint list. When every existing node
/// has degree 0 (only for m == 1 on the first step) targets are uniform.
inline Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  detail::require_node_count(n);
  if (m < 1 || m >= n) {
    detail::fail(ErrorKind::kInvalidParameter, "barabasi_albert needs 1 <= m < n");
  }
  Rng rng(seed);
  std::vector<NodePair> edges;
  edges.reserve(m * (m - 1) / 2 + (n - m) * m);
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeId i = 0; i < m; ++i) {
    for (NodeId j = i + 1; j < m; ++j) {
      edges.push_back({i, j});
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  std::vector<NodeId> targets;
  std::vector<std::uint8_t> chosen(n, 0);
  for (NodeId node = static_cast<NodeId>(m); node < n; ++node) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId candidate = endpoints.empty()
                                   ? static_cast<NodeId>(rng.below(node))
                                   : endpoints[rng.below(endpoints.size())];
      if (chosen[candidate]) continue;
      chosen[candidate] = 1;
      targets.push_back(candidate);
    }
    for (NodeId t : targets) {
      chosen[t] = 0;
      edges.push_back({t, node});
      endpoints.push_back(t);
      endpoints.push_back(node);
    }
  }
  return build_graph(edges, n);
}

inline Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kErdosRenyi: return erdos_renyi(spec.n, spec.p, spec.seed);
    case GeneratorKind::kBarabasiAlbert: return barabasi_albert(spec.n, spec.m, spec.seed);
    case GeneratorKind::kStochasticBlock:
      return stochastic_block(spec.n, spec.k, spec.p_in, spec.p_out, spec.seed).graph;
  }
  detail::fail(ErrorKind::kInvalidParameter, "unknown generator kind");
}

}  // namespace linkpred
