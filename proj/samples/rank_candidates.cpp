// Ranks held-out edges against sampled non-edges on a planted-community
// graph with each similarity index, and prints test AUC-ROC and AUPR.

#include <cstdio>

#include "linkpred/linkpred.hpp"

int main() {
  using namespace linkpred;
  const auto sbm = stochastic_block(300, 6, 0.2, 0.005, 11);
  const EdgeSplit split = split_edges(sbm.graph, SplitRatios{0.8, 0.1, 0.1}, 11);
  const auto test = labeled_pairs(split.test_pos, split.test_neg);

  for (IndexKind kind : {IndexKind::kCommonNeighbors, IndexKind::kJaccard, IndexKind::kAdamicAdar,
                         IndexKind::kCnc}) {
    const auto scored = score_pairs(IndexScorer{kind, CncParams(0.8)}, split.train_graph, test);
    std::printf("%-4s AUC-ROC %.4f  AUPR %.4f\n", index_name(kind).data(), auc_roc(scored), aupr(scored));
  }
}
