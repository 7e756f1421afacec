#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracle.hpp"
#include "tpturan/tpturan.hpp"

using namespace tpturan;
using test_support::frozen;

TEST(Canonical, RelabellingInvariant) {
  Rng rng(43);
  const RGraph base = canonical_form(f5_pattern());
  for (int i = 0; i < 50; ++i) {
    RGraph moved = relabel(f5_pattern(), test_support::random_permutation(rng, 5));
    EXPECT_EQ(canonical_form(moved), base);
  }
  EXPECT_EQ(canonical_form(base), base);
}

TEST(Canonical, MissingEdgeOfCompleteGraph) {
  RGraph a(3, 4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  RGraph b(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_TRUE(isomorphic(a, b));
}

TEST(Canonical, SeparatesAllThreeEdgeGraphsOnSixVertices) {
  auto triples = all_subsets(6, 3);
  std::set<std::vector<Vertex>> forms;
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a + 1; b < triples.size(); ++b)
      for (std::size_t c = b + 1; c < triples.size(); ++c)
        forms.insert(canonical_form(RGraph(3, 6, {triples[a], triples[b], triples[c]})).flat());
  EXPECT_EQ(forms.size(), frozen()["three_edge_classes_n6"].get<std::size_t>());
}

TEST(Canonical, SizeLimit) { EXPECT_THROW(canonical_form(RGraph(3, 11)), SizeError); }

TEST(Exact, MatchesBruteForceOracle) {
  for (auto& [key, expected] : frozen()["exact"].items()) {
    const auto bar1 = key.find('|'), bar2 = key.rfind('|');
    const std::string family = key.substr(0, bar1);
    const std::size_t n = std::stoul(key.substr(bar1 + 1, bar2 - bar1 - 1));
    const double p = std::stod(key.substr(bar2 + 1));
    auto res = exact_turan(n, 3, ForbiddenFamily::parse(family), {2, p});
    EXPECT_NEAR(res.value, expected["value"].get<double>(), 1e-9) << key;
    EXPECT_EQ(res.witnesses.size(), expected["classes"].get<std::size_t>()) << key;
  }
}

TEST(Exact, RawAndOrderlyAgree) {
  for (const char* family : {"F5", "K4_3", "F5,K43minus"})
    for (double p : {1.0, 2.0})
      for (std::size_t n = 3; n <= 5; ++n) {
        auto fam = ForbiddenFamily::parse(family);
        auto raw = exact_turan(n, 3, fam, {2, p}, ExactStrategy::exhaustive);
        auto orderly = exact_turan(n, 3, fam, {2, p}, ExactStrategy::canonical_generation);
        EXPECT_EQ(raw.method, SearchMethod::exhaustive);
        EXPECT_EQ(orderly.method, SearchMethod::canonical_generation);
        EXPECT_NEAR(raw.value, orderly.value, 1e-9) << family << ' ' << n << ' ' << p;
        EXPECT_EQ(raw.witnesses, orderly.witnesses) << family << ' ' << n << ' ' << p;
      }
}

TEST(Exact, StarBeatsTripartiteAtFiveVertices) {
  auto res = exact_turan(5, 3, ForbiddenFamily::parse("F5"), {2, 1.0});
  EXPECT_DOUBLE_EQ(res.value, 18.0);
  auto best_partite = optimize_partite_sizes(5, 3, 3, {2, 1.0});
  EXPECT_DOUBLE_EQ(best_partite.norm, 12.0);
  ASSERT_EQ(res.witnesses.size(), 1u);
  EXPECT_FALSE(contains_f5_fast(res.witnesses[0]));
  EXPECT_EQ(res.witnesses[0].edge_count(), 6u);
  EXPECT_NE(res.note.find("expected at small n"), std::string::npos) << res.note;
  EXPECT_TRUE(exact_turan(5, 3, ForbiddenFamily::parse("K4_3"), {2, 1.0}).note.empty());
}

TEST(Exact, OnlyCliqueForbidden) {
  auto res = exact_turan(4, 3, ForbiddenFamily::parse("K4_3"), {2, 1.0});
  EXPECT_DOUBLE_EQ(res.value, 9.0);
  ASSERT_EQ(res.witnesses.size(), 1u);
  EXPECT_TRUE(isomorphic(res.witnesses[0], k43_minus_pattern()));
}

TEST(Exact, SixVerticesStillRaw) {
  auto res = exact_turan(6, 3, ForbiddenFamily::parse("F5"), {2, 1.0});
  EXPECT_EQ(res.method, SearchMethod::exhaustive);
  auto orderly = exact_turan(6, 3, ForbiddenFamily::parse("F5"), {2, 1.0}, ExactStrategy::canonical_generation);
  EXPECT_DOUBLE_EQ(res.value, frozen()["exact"]["F5|6|1.0"]["value"].get<double>());
  EXPECT_DOUBLE_EQ(orderly.value, res.value);
  EXPECT_EQ(orderly.witnesses, res.witnesses);
}

TEST(Exact, SevenVerticesUseOrderlyGeneration) {
  auto res = exact_turan(7, 3, ForbiddenFamily::parse("F5"), {2, 1.0});
  EXPECT_EQ(res.method, SearchMethod::canonical_generation);
  // the star through one vertex has 15 edges
  EXPECT_GE(res.value, 45.0);
  ASSERT_FALSE(res.witnesses.empty());
  for (const auto& w : res.witnesses) {
    EXPECT_NEAR(tp_norm(w, {2, 1.0}), res.value, 1e-9);
    EXPECT_FALSE(contains_f5_fast(w));
  }
}

TEST(Exact, LimitsAndInputs) {
  auto f5 = ForbiddenFamily::parse("F5");
  EXPECT_THROW(exact_turan(7, 3, f5, {2, 1.0}, ExactStrategy::exhaustive), SizeError);
  EXPECT_THROW(exact_turan(8, 3, f5, {2, 1.0}), SizeError);
  EXPECT_THROW(exact_turan(5, 4, f5, {2, 1.0}), ParameterError);
}

TEST(Hillclimb, NeverExceedsExactAndMatchesSmallCases) {
  for (const char* family : {"F5", "K4_3", "F5,K43minus"})
    for (double p : {1.0, 2.0})
      for (std::size_t n = 3; n <= 6; ++n) {
        auto fam = ForbiddenFamily::parse(family);
        auto exact = exact_turan(n, 3, fam, {2, p});
        HillclimbOptions opts;
        opts.seed = 1;
        opts.budget = 20000;
        auto hill = hillclimb_turan(n, 3, fam, {2, p}, opts);
        EXPECT_LE(hill.value, exact.value + 1e-9) << family << ' ' << n;
        if (n <= 5) {
          EXPECT_NEAR(hill.value, exact.value, 1e-9) << family << ' ' << n << ' ' << p;
        }
        for (const auto& w : hill.witnesses) EXPECT_FALSE(fam.contains_any(w));
      }
}

TEST(Hillclimb, TwelveVerticesReachesTuranValue) {
  HillclimbOptions opts;
  opts.seed = 7;
  opts.budget = 50000;
  auto res = hillclimb_turan(12, 3, ForbiddenFamily::parse("F5"), {2, 1.0}, opts);
  EXPECT_GE(res.value, 192.0);
  EXPECT_EQ(res.method, SearchMethod::hillclimb);
  ASSERT_FALSE(res.witnesses.empty());
  EXPECT_FALSE(contains_f5_fast(res.witnesses[0]));
}

TEST(Hillclimb, LargeExponentAtLeastBestPartite) {
  HillclimbOptions opts;
  opts.budget = 20000;
  auto res = hillclimb_turan(9, 3, ForbiddenFamily::parse("F5"), {2, 6.0}, opts);
  EXPECT_GE(res.value, frozen()["partite_n9_p6"]["norm"].get<double>() - 1e-6);
}

TEST(Hillclimb, SameSeedSameResult) {
  HillclimbOptions opts;
  opts.seed = 3;
  opts.budget = 5000;
  auto a = hillclimb_turan(8, 3, ForbiddenFamily::parse("F5"), {2, 1.5}, opts);
  auto b = hillclimb_turan(8, 3, ForbiddenFamily::parse("F5"), {2, 1.5}, opts);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST(Density, SmallExactValues) {
  auto pts = density_sequence(ForbiddenFamily::parse("F5"), 3, {2, 1.0}, {4, 5, 6});
  ASSERT_EQ(pts.size(), 3u);
  for (const auto& pt : pts) {
    EXPECT_TRUE(pt.exact);
    EXPECT_NEAR(pt.normalized, frozen()["density_f5_p1"][std::to_string(pt.n)].get<double>(), 1e-12) << pt.n;
  }
}

TEST(Density, ConstructionsApproachTheLimit) {
  auto pts = density_sequence(ForbiddenFamily::parse("F5"), 3, {2, 0.5}, {30, 60, 120});
  const double limit = 2.0 / std::pow(3.0, 1.5);
  for (const auto& pt : pts) {
    EXPECT_FALSE(pt.exact);
    EXPECT_LE(pt.normalized, limit + 1e-9);
    EXPECT_GT(pt.normalized, 0.95 * limit);
  }
}

TEST(Density, EmptyFamilyIsCompleteGraph) {
  auto pts = density_sequence(ForbiddenFamily::parse("none"), 3, {2, 1.5}, {10, 20});
  for (const auto& pt : pts) {
    EXPECT_EQ(pt.method, SearchMethod::closed_form);
    const double n = double(pt.n);
    const double expected = 2.0 * (n * (n - 1) / 2) * std::pow(n - 2, 1.5) / std::pow(n, 3.5);
    EXPECT_NEAR(pt.normalized, expected, 1e-12);
  }
}
