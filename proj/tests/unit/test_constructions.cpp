#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracle.hpp"
#include "tpturan/tpturan.hpp"

using namespace tpturan;
using test_support::frozen;

TEST(Sts, SmallOrders) {
  EXPECT_EQ(sts(3).edge_count(), 1u);
  EXPECT_EQ(sts(7).edge_count(), 7u);
  EXPECT_EQ(sts(9).edge_count(), 12u);
}

TEST(Sts, PairCoverageForEveryAdmissibleOrder) {
  for (std::size_t k = 3; k <= 45; ++k) {
    if (k % 6 != 1 && k % 6 != 3) continue;
    RGraph h = sts(k);
    EXPECT_TRUE(is_steiner_triple_system(h)) << k;
    EXPECT_EQ(h.edge_count(), k * (k - 1) / 6) << k;
    EXPECT_FALSE(contains_f5_fast(h)) << k;
  }
}

TEST(Sts, InadmissibleOrders) {
  for (std::size_t k : {0, 1, 2, 4, 5, 6, 8, 11, 12}) EXPECT_THROW(sts(k), DomainError) << k;
}

TEST(Sts, FanoFileIsATripleSystem) { EXPECT_TRUE(isomorphic(test_support::data_graph("fano.rg"), sts(7))); }

TEST(Blowup, EdgeCountIsProduct) {
  RGraph edge(3, 3, {{0, 1, 2}});
  EXPECT_EQ(blowup(edge, {2, 2, 2}).edge_count(), 8u);
  EXPECT_EQ(blowup(edge, {2, 3, 4}), complete_partite({2, 3, 4}, 3));
  EXPECT_EQ(blowup(edge, {0, 3, 4}).edge_count(), 0u);
  EXPECT_THROW(blowup(edge, {1, 2}), ParameterError);
  EXPECT_THROW(blowup(edge, {1, -1, 2}), ParameterError);
}

TEST(Blowup, PreservesF5Freeness) {
  for (std::size_t k : {7, 9, 13}) {
    RGraph h = balanced_blowup(sts(k), 3 * k);
    EXPECT_EQ(h.vertex_count(), 3 * k);
    EXPECT_FALSE(contains_f5_fast(h)) << k;
  }
}

TEST(Blowup, BalancedSizesSpreadTheRemainder) {
  EXPECT_EQ(balanced_sizes(10, 3), (std::vector<long long>{4, 3, 3}));
  EXPECT_EQ(turan_graph(10, 3, 3).edge_count(), 36u);
  EXPECT_THROW(turan_graph(10, 2, 3), ParameterError);
}

TEST(PartiteNorm, ClosedFormMatchesGraph) {
  for (double p : {0.5, 1.0, 2.5}) {
    for (const auto& sizes : {std::vector<long long>{2, 3, 4}, {1, 1, 5}, {3, 3, 3, 2}}) {
      RGraph h = complete_partite(sizes, 3);
      EXPECT_NEAR(complete_partite_norm(sizes, 3, {2, p}), tp_norm(h, {2, p}), 1e-9 * tp_norm(h, {2, p}));
      EXPECT_NEAR(complete_partite_norm(sizes, 3, {1, p}), tp_norm(h, {1, p}), 1e-9 * tp_norm(h, {1, p}));
    }
  }
}

TEST(PartiteNorm, PermutationInvariant) {
  const double a = complete_partite_norm({2, 5, 9}, 3, {2, 3.3});
  EXPECT_DOUBLE_EQ(a, complete_partite_norm({9, 2, 5}, 3, {2, 3.3}));
  EXPECT_DOUBLE_EQ(a, complete_partite_norm({5, 9, 2}, 3, {2, 3.3}));
}

TEST(OptimalPartite, BalancedAtPOne) {
  auto best = optimize_partite_sizes(30, 3, 3, {2, 1.0});
  EXPECT_EQ(best.sizes, (std::vector<long long>{10, 10, 10}));
  EXPECT_TRUE(best.exhaustive);
  EXPECT_DOUBLE_EQ(best.norm, 3000.0);
}

TEST(OptimalPartite, UnbalancedForLargeP) {
  auto best = optimize_partite_sizes(30, 3, 3, {2, 6.0});
  EXPECT_GT(best.sizes.front(), 10);
  auto small = optimize_partite_sizes(9, 3, 3, {2, 6.0});
  EXPECT_EQ(small.sizes, frozen()["partite_n9_p6"]["sizes"].get<std::vector<long long>>());
  EXPECT_DOUBLE_EQ(small.norm, frozen()["partite_n9_p6"]["norm"].get<double>());
}

TEST(OptimalPartite, HillclimbPathAgreesWithEnumeration) {
  // Six parts of 200 vertices is beyond the enumeration bound.
  auto big = optimize_partite_sizes(200, 6, 3, {2, 1.0}, 3);
  EXPECT_FALSE(big.exhaustive);
  auto balanced = balanced_sizes(200, 6);
  EXPECT_NEAR(big.norm, complete_partite_norm(balanced, 3, {2, 1.0}), 1e-9 * big.norm);
}

TEST(Counterexample, Shape) {
  auto ce = appendix_counterexample(30, 0.1);
  EXPECT_EQ(ce.graph.vertex_count(), 31u);
  EXPECT_EQ(ce.marked_size, 3u);
  EXPECT_EQ(ce.extra_vertex, 30u);
  std::size_t at_star = 0;
  for (auto e : ce.graph.edge_list())
    if (e.back() == ce.extra_vertex) ++at_star;
  EXPECT_EQ(at_star, 9u + 1u);
  EXPECT_EQ(ce.graph.edge_count(), frozen()["counterexample_edges"]["30"].get<std::size_t>());
  EXPECT_EQ(appendix_counterexample(60, 0.1).graph.edge_count(),
            frozen()["counterexample_edges"]["60"].get<std::size_t>());
}

TEST(Counterexample, MinimumDegreeMatchesOracle) {
  for (std::size_t n : {30u, 60u}) {
    auto ce = appendix_counterexample(n, 0.1);
    auto stats = tp_degree_stats(ce.graph, {2, 0.5});
    EXPECT_NEAR(stats.min, frozen()["counterexample_min_degree"][std::to_string(n)].get<double>(), 1e-9) << n;
  }
}

TEST(Counterexample, FreeButNotPartite) {
  auto ce = appendix_counterexample(30, 0.1);
  EXPECT_FALSE(contains_f5_fast(ce.graph));
  EXPECT_FALSE(strong_partition(ce.graph, 3).has_value());
  std::vector<Vertex> rest(30);
  std::iota(rest.begin(), rest.end(), Vertex{0});
  RGraph reduced = induced_subgraph(ce.graph, rest);
  auto cert = strong_partition(reduced, 3);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(certifies(reduced, *cert));
}

TEST(Counterexample, Preconditions) {
  EXPECT_THROW(appendix_counterexample(31, 0.1), PreconditionError);
  EXPECT_THROW(appendix_counterexample(30, 0.0), PreconditionError);
  EXPECT_THROW(appendix_counterexample(30, 0.01), PreconditionError);
  EXPECT_THROW(appendix_counterexample(30, 0.4), PreconditionError);
}
