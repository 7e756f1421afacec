// Randomized invariant checks with fixed seeds.
#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "tpturan/tpturan.hpp"

using namespace tpturan;
using test_support::random_graph;
using test_support::random_permutation;

namespace {

bool close_ulps(double a, double b) { return within_ulps(a, b, 8) || std::fabs(a - b) <= 8 * ulp(std::max(std::fabs(a), std::fabs(b))); }

RGraph drop_random_edges(Rng& rng, const RGraph& h, double keep) {
  std::vector<Subset> edges;
  for (auto& e : h.edge_list())
    if (rng.uniform() < keep) edges.push_back(e);
  return RGraph(h.uniformity(), h.vertex_count(), edges);
}

}  // namespace

TEST(NormProperties, PowerOneAndZero) {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform());
    for (unsigned t = 1; t < r; ++t) {
      EXPECT_EQ(tp_norm(h, {t, 1.0}), double(binomial(r, t) * h.edge_count()));
      EXPECT_EQ(tp_norm(h, {t, 0.0}), double(shadow(h, r - t).size()));
    }
  }
}

TEST(NormProperties, DegreeModesAgree) {
  Rng rng(103);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform());
    const unsigned t = 1 + static_cast<unsigned>(rng.below(r - 1));
    for (double p : {0.5, 1.0, 2.0, 3.7}) {
      auto fast = tp_degrees(h, {t, p});
      for (Vertex v = 0; v < n; ++v) {
        const double slow = tp_degree(h, v, {t, p}, DegreeMethod::definitional);
        ASSERT_TRUE(close_ulps(fast[v], slow)) << fast[v] << " vs " << slow << "\n" << to_rg(h);
      }
    }
  }
}

TEST(NormProperties, DoubleCountingIdentities) {
  Rng rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform());
    const unsigned t = 1 + static_cast<unsigned>(rng.below(r - 1));
    const double p = rng.uniform(0.0, 4.0);
    const double norm = tp_norm(h, {t, p});
    auto sums = double_counting_sums(h, {t, p});
    ASSERT_TRUE(close_ulps(sums.through_v, t * norm)) << sums.through_v << " vs " << t * norm;
    ASSERT_TRUE(close_ulps(sums.weighted, (r - t) * norm)) << sums.weighted << " vs " << (r - t) * norm;
  }
}

TEST(NormProperties, SymmetrizationIncreasing) {
  Rng rng(109);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 4 + rng.below(5);
    RGraph h = random_graph(rng, n, 3, rng.uniform(0.05, 0.5));
    auto pairs = uncovered_pairs(h);
    if (pairs.empty()) continue;
    const auto [u, v] = pairs[rng.below(pairs.size())];
    const TpParams params{static_cast<unsigned>(1 + rng.below(2)), rng.uniform(1.0, 4.0)};
    const double lhs = 2 * tp_norm(h, params);
    const double rhs = tp_norm(symmetrize(h, u, v), params) + tp_norm(symmetrize(h, v, u), params);
    ASSERT_LE(lhs, rhs + 8 * ulp(rhs)) << to_rg(h) << u << ' ' << v;
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(NormProperties, LocalMonotonicity) {
  Rng rng(113);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 4 + rng.below(5);
    RGraph h = random_graph(rng, n, 3, rng.uniform(0.1, 0.7));
    RGraph sub = drop_random_edges(rng, h, 0.6);
    const TpParams params{static_cast<unsigned>(1 + rng.below(2)), rng.uniform(1.0, 4.0)};
    auto big = tp_degrees(h, params), small = tp_degrees(sub, params);
    for (Vertex v = 0; v < n; ++v) ASSERT_GE(big[v], small[v] - 8 * ulp(small[v])) << to_rg(h);
    ASSERT_LE(tp_norm(sub, params), tp_norm(h, params) + 8 * ulp(tp_norm(h, params)));
  }
}

TEST(NormProperties, JensenForSmallP) {
  Rng rng(127);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform());
    if (h.empty()) continue;
    const unsigned t = 1 + static_cast<unsigned>(rng.below(r - 1));
    const double p = rng.uniform(0.01, 0.99);
    const double bound = std::pow(double(binomial(r, t) * h.edge_count()), p) *
                         std::pow(double(shadow(h, r - t).size()), 1.0 - p);
    ASSERT_LE(tp_norm(h, {t, p}), bound * (1 + 1e-12));
  }
}

TEST(PatternProperties, ContainmentIsMonotone) {
  Rng rng(131);
  for (int trial = 0; trial < 1000; ++trial) {
    RGraph h = random_graph(rng, 6, 3, rng.uniform(0.05, 0.4));
    if (!contains_f5_fast(h)) continue;
    auto edges = h.edge_list();
    for (auto& e : all_subsets(6, 3))
      if (!h.has_edge(e) && rng.uniform() < 0.3) edges.push_back(e);
    ASSERT_TRUE(contains_pattern(RGraph(3, 6, edges), f5_pattern()));
  }
}

TEST(PatternProperties, F5DetectorExhaustiveOnSixVertices) {
  // All 3-graphs on 6 vertices with at most 4 edges.
  auto triples = all_subsets(6, 3);
  std::vector<Subset> chosen;
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    RGraph h(3, 6, chosen);
    ASSERT_EQ(contains_f5_fast(h), contains_pattern(h, f5_pattern())) << to_rg(h);
    ++count;
    if (chosen.size() == 4) return;
    for (std::size_t i = start; i < triples.size(); ++i) {
      chosen.push_back(triples[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  EXPECT_EQ(count, 1u + 20u + 190u + 1140u + 4845u);
}

TEST(PatternProperties, PartitionSurvivesBlowup) {
  Rng rng(137);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    RGraph h = random_graph(rng, 6, 3, rng.uniform(0.1, 0.4));
    auto cert = strong_partition(h, 3);
    if (!cert) continue;
    std::vector<long long> sizes(6);
    for (auto& s : sizes) s = 1 + static_cast<long long>(rng.below(3));
    RGraph big = blowup(h, sizes);
    PartitionCertificate induced{3, {}};
    for (std::size_t v = 0; v < 6; ++v) induced.part.insert(induced.part.end(), sizes[v], cert->part[v]);
    ASSERT_TRUE(certifies(big, induced));
    ASSERT_TRUE(strong_partition(big, 3).has_value());
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(LagrangianProperties, BlowupNormBoundedByLagrangian) {
  Rng rng(139);
  for (int trial = 0; trial < 200; ++trial) {
    RGraph g = random_graph(rng, 5, 3, rng.uniform(0.2, 0.8));
    if (g.empty()) continue;
    const TpParams params{2, rng.uniform(1.0, 3.0)};
    const double lambda = maximize_lagrangian(g, params).value;
    std::vector<long long> sizes(5);
    for (auto& s : sizes) s = static_cast<long long>(rng.below(4));
    RGraph h = blowup(g, sizes);
    const double total = double(h.vertex_count());
    if (total == 0) continue;
    // The blowup norm is the Lagrange form at the part sizes.
    std::vector<double> weights(sizes.begin(), sizes.end());
    EXPECT_NEAR(tp_norm(h, params), eval_lagrange_unnormalized(g, params, weights), 1e-9 * tp_norm(h, params) + 1e-12);
    const double scale = std::pow(total, params.exponent(3));
    ASSERT_LE(tp_norm(h, params), lambda * scale + 1e-6 * scale) << to_rg(g);
  }
}

TEST(LagrangianProperties, SubgraphMonotone) {
  Rng rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    RGraph g = random_graph(rng, 6, 3, rng.uniform(0.3, 0.8));
    RGraph sub = drop_random_edges(rng, g, 0.6);
    if (sub.empty()) continue;
    const TpParams params{2, rng.uniform(1.0, 3.0)};
    ASSERT_LE(maximize_lagrangian(sub, params).value, maximize_lagrangian(g, params).value + 1e-7) << to_rg(g);
  }
}

TEST(LagrangianProperties, HolderInterpolation) {
  Rng rng(151);
  for (int trial = 0; trial < 1000; ++trial) {
    RGraph g = random_graph(rng, 5, 3, rng.uniform(0.2, 0.8));
    if (g.empty()) continue;
    const double p1 = rng.uniform(1.0, 2.0), p2 = p1 + rng.uniform(0.5, 2.0);
    const double p = rng.uniform(p1, p2);
    // At a fixed point the form itself interpolates, so no optimizer error enters.
    auto x = rng.dirichlet_one(5);
    const double a = eval_lagrange_unnormalized(g, {2, p1}, x);
    const double b = eval_lagrange_unnormalized(g, {2, p2}, x);
    const double mid = eval_lagrange_unnormalized(g, {2, p}, x);
    const double w = (p2 - p) / (p2 - p1);
    ASSERT_LE(mid, std::pow(a, w) * std::pow(b, 1 - w) * (1 + 1e-12) + 1e-15);
  }
}

TEST(LagrangianProperties, ScalarMaximaMatchOptimizer) {
  for (double p : {0.5, 1.0, 2.0, 3.7, 8.0})
    EXPECT_NEAR(maximize_lagrangian(complete_graph(3, 3), {2, p}).value, h_star(p).value, 1e-6) << p;
  for (double p : {1.0, 2.0, 3.5, 5.0})
    EXPECT_NEAR(maximize_lagrangian(complete_graph(2, 2), {1, p}).value, g_star(p).value, 1e-6) << p;
}

TEST(SearchProperties, CanonicalFormIdempotentAndInvariant) {
  Rng rng(157);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng.below(6);
    RGraph h = random_graph(rng, n, 3, rng.uniform());
    RGraph c = canonical_form(h);
    ASSERT_EQ(canonical_form(c), c);
    ASSERT_EQ(canonical_form(relabel(h, random_permutation(rng, n))), c) << to_rg(h);
  }
}

TEST(SearchProperties, WitnessesAreLocallyMaximal) {
  for (double p : {1.0, 2.0}) {
    auto fam = ForbiddenFamily::parse("F5");
    auto res = exact_turan(6, 3, fam, {2, p});
    for (const auto& w : res.witnesses) {
      ASSERT_FALSE(fam.contains_any(w));
      for (auto& e : all_subsets(6, 3)) {
        if (w.has_edge(e)) continue;
        auto edges = w.edge_list();
        edges.push_back(e);
        RGraph bigger(3, 6, edges);
        EXPECT_TRUE(fam.contains_any(bigger) || tp_norm(bigger, {2, p}) <= res.value + 1e-9);
      }
    }
  }
}

TEST(SearchProperties, PowerOneIsEdgeCount) {
  auto fam = ForbiddenFamily::parse("F5");
  for (std::size_t n = 3; n <= 5; ++n) {
    // Plain edge-count exhaustion.
    auto universe = all_subsets(n, 3);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
      std::vector<Subset> edges;
      for (std::size_t i = 0; i < universe.size(); ++i)
        if (mask >> i & 1) edges.push_back(universe[i]);
      if (edges.size() <= best) continue;
      if (!contains_pattern(RGraph(3, n, edges), f5_pattern())) best = edges.size();
    }
    EXPECT_DOUBLE_EQ(exact_turan(n, 3, fam, {2, 1.0}).value, 3.0 * best) << n;
  }
}
