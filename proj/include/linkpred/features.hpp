#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linkpred/dataset.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/indices.hpp"
#include "linkpred/metrics.hpp"

namespace linkpred {

inline constexpr std::size_t kFeatureCount = 7;
using FeatureVector = std::array<double, kFeatureCount>;

inline std::vector<std::string> feature_names() {
  return {"common_neighbors", "jaccard", "adamic_adar", "cnc", "degree_u", "degree_v", "union_size"};
}

/// [common neighbors, jaccard, adamic-adar, cnc(alpha), deg u, deg v, |N(u) ∪ N(v)|]
inline FeatureVector extract_features(const Graph& g, NodeId u, NodeId v, CncParams cnc,
                                      EdgeVisibility visibility = EdgeVisibility::kAsIs) {
  const double common = common_neighbor_count(g, u, v);
  const bool hidden = visibility == EdgeVisibility::kHideDirectEdge && g.has_edge(u, v);
  const double shift = hidden ? 1.0 : 0.0;
  const double deg_u = static_cast<double>(g.degree(u)) - shift;
  const double deg_v = static_cast<double>(g.degree(v)) - shift;
  return {common,
          jaccard(g, u, v, visibility),
          adamic_adar(g, u, v, visibility),
          common_neighbor_centrality(g, u, v, cnc, visibility),
          deg_u,
          deg_v,
          deg_u + deg_v - common};
}

/// Feature rows for labeled candidate pairs, scored as candidates (an
/// existing edge between the pair is hidden).
inline Dataset build_dataset(const Graph& g, std::span<const LabeledPair> pairs, CncParams cnc) {
  Dataset d(feature_names());
  for (const LabeledPair& p : pairs) {
    const FeatureVector x = extract_features(g, p.u, p.v, cnc, EdgeVisibility::kHideDirectEdge);
    d.add(x, p.label);
  }
  return d;
}

}  // namespace linkpred
