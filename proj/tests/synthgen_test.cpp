#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "linkpred/synthgen.hpp"

namespace linkpred {
namespace {

void expect_invalid_parameter(auto&& call) {
  try {
    call();
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
  }
}

TEST(ErdosRenyi, ExtremeProbabilities) {
  EXPECT_EQ(erdos_renyi(30, 0.0, 1).edge_count(), 0U);
  EXPECT_EQ(erdos_renyi(30, 1.0, 1).edge_count(), 30U * 29U / 2U);
}

TEST(ErdosRenyi, EdgeCountWithinFourSigma) {
  const double n = 200;
  const double p = 0.1;
  const double pairs = n * (n - 1) / 2;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const double m = static_cast<double>(erdos_renyi(200, p, seed).edge_count());
    EXPECT_LT(std::abs(m - pairs * p), 4 * sigma);
  }
}

TEST(ErdosRenyi, Deterministic) { EXPECT_EQ(erdos_renyi(80, 0.1, 9), erdos_renyi(80, 0.1, 9)); }

TEST(ErdosRenyi, RejectsBadParameters) {
  expect_invalid_parameter([] { erdos_renyi(10, 1.5, 0); });
  expect_invalid_parameter([] { erdos_renyi(10, -0.1, 0); });
  expect_invalid_parameter([] { erdos_renyi(0, 0.5, 0); });
}

TEST(BarabasiAlbert, OneMoreThanSeedCliqueIsComplete) {
  for (std::size_t m = 1; m < 8; ++m) {
    const Graph g = barabasi_albert(m + 1, m, m);
    EXPECT_EQ(g.edge_count(), (m + 1) * m / 2);
  }
}

TEST(BarabasiAlbert, EdgeCountArithmetic) {
  for (std::size_t m : {1U, 2U, 3U, 5U}) {
    for (std::size_t n : {m + 1, 50UL, 300UL}) {
      const Graph g = barabasi_albert(n, m, 17);
      EXPECT_EQ(g.edge_count(), m * (m - 1) / 2 + (n - m) * m) << n << " " << m;
    }
  }
}

TEST(BarabasiAlbert, GrowsHubs) {
  const Graph g = barabasi_albert(500, 3, 2024);
  std::vector<std::size_t> degrees;
  for (NodeId u = 0; u < 500; ++u) degrees.push_back(g.degree(u));
  std::sort(degrees.begin(), degrees.end());
  const double median = (static_cast<double>(degrees[249]) + static_cast<double>(degrees[250])) / 2;
  EXPECT_GT(static_cast<double>(degrees.back()), median);
}

TEST(BarabasiAlbert, RejectsBadAttachmentCount) {
  expect_invalid_parameter([] { barabasi_albert(5, 5, 0); });
  expect_invalid_parameter([] { barabasi_albert(5, 0, 0); });
}

TEST(StochasticBlock, EqualProbabilitiesReproduceErdosRenyi) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(stochastic_block(60, 4, 0.2, 0.2, seed).graph, erdos_renyi(60, 0.2, seed));
  }
}

TEST(StochasticBlock, DisjointCliques) {
  const BlockGraph bg = stochastic_block(20, 3, 1.0, 0.0, 5);
  std::size_t expected = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    const std::size_t size = static_cast<std::size_t>(std::count(bg.blocks.begin(), bg.blocks.end(), b));
    expected += size * (size - 1) / 2;
  }
  EXPECT_EQ(bg.graph.edge_count(), expected);
  for (const NodePair& e : bg.graph.edges()) EXPECT_EQ(bg.blocks[e.u], bg.blocks[e.v]);
}

TEST(StochasticBlock, RoundRobinAssignment) {
  const auto blocks = round_robin_blocks(7, 3);
  EXPECT_EQ(blocks, (std::vector<std::size_t>{0, 1, 2, 0, 1, 2, 0}));
}

TEST(StochasticBlock, MostEdgesStayInsideBlocks) {
  // Expected counts: 4 * C(50,2) * 0.3 = 1470 intra, (C(200,2) - 4900) * 0.01 = 150
  // inter, an intra fraction of 0.907. A single draw sits within a couple of
  // points of that, so the counts are pooled over 20 seeds.
  std::size_t intra = 0;
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BlockGraph bg = stochastic_block(200, 4, 0.3, 0.01, seed);
    for (const NodePair& e : bg.graph.edges()) intra += (e.u % 4 == e.v % 4) ? 1 : 0;
    total += bg.graph.edge_count();
  }
  const double inter = static_cast<double>(total - intra);
  EXPECT_NEAR(static_cast<double>(intra) / 20.0, 1470.0, 4 * std::sqrt(4900 * 0.3 * 0.7 / 20));
  EXPECT_NEAR(inter / 20.0, 150.0, 4 * std::sqrt(15000 * 0.01 * 0.99 / 20));
  EXPECT_GT(static_cast<double>(intra), 0.9 * static_cast<double>(total));
}

TEST(StochasticBlock, RejectsBadParameters) {
  expect_invalid_parameter([] { stochastic_block(10, 11, 0.5, 0.1, 0); });
  expect_invalid_parameter([] { stochastic_block(10, 0, 0.5, 0.1, 0); });
  expect_invalid_parameter([] { stochastic_block(10, 2, 2.0, 0.1, 0); });
}

TEST(Generate, DispatchesOnKind) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kBarabasiAlbert;
  spec.n = 40;
  spec.m = 2;
  spec.seed = 3;
  EXPECT_EQ(generate(spec), barabasi_albert(40, 2, 3));
  spec.kind = GeneratorKind::kStochasticBlock;
  spec.k = 2;
  spec.p_in = 0.4;
  spec.p_out = 0.05;
  EXPECT_EQ(generate(spec), stochastic_block(40, 2, 0.4, 0.05, 3).graph);
}

}  // namespace
}  // namespace linkpred
