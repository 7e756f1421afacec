#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "tpturan/tpturan.hpp"

using namespace tpturan;
using test_support::frozen;

TEST(GStar, ClosedValuesOnTheFlatRange) {
  EXPECT_NEAR(g_star(1.0).value, 0.5, 1e-15);
  EXPECT_NEAR(g_star(1.0).argmax[0] + g_star(1.0).argmax[1], 1.0, 1e-15);
  EXPECT_NEAR(g_star(2.0).value, 0.25, 1e-15);
  EXPECT_NEAR(g_star(2.5).value, std::pow(2.0, -2.5), 1e-15);
  EXPECT_NEAR(g_star(3.0).value, 0.125, 1e-15);
  EXPECT_NEAR(g_star(2.5).argmax[0], 0.5, 1e-6);
}

TEST(GStar, MatchesHighPrecisionOracle) {
  for (auto& [key, value] : frozen()["g_star"].items())
    EXPECT_NEAR(g_star(std::stod(key)).value, value.get<double>(), 1e-14) << "p=" << key;
}

TEST(GStar, ArgmaxLeavesTheMidpointAboveThree) {
  const double x = g_star(3.01).argmax[0];
  EXPECT_NEAR(x, frozen()["g_argmax_3_01"].get<double>(), 1e-7);
  EXPECT_LT(x, 0.5);
}

TEST(GStar, ArgmaxInterval) {
  for (double p : {3.5, 4.0, 6.0, 10.0, 14.0}) EXPECT_TRUE(star_argmax_interval_check(p)) << p;
  EXPECT_THROW(star_argmax_interval_check(2.5), DomainError);
}

TEST(HStar, AmGmAtPOne) {
  auto m = h_star(1.0);
  EXPECT_NEAR(m.value, 1.0 / 9.0, 1e-14);
  for (double x : m.argmax) EXPECT_NEAR(x, 1.0 / 3.0, 1e-5);
}

TEST(HStar, MatchesOptimizerOracle) {
  for (auto& [key, value] : frozen()["h_star"].items())
    EXPECT_NEAR(h_star(std::stod(key)).value, value.get<double>(), 1e-10) << "p=" << key;
}

TEST(HStar, ArgmaxEvaluatesToValue) {
  for (double p : {0.3, 1.5, 4.0, 9.0}) {
    auto m = h_star(p);
    EXPECT_NEAR(h_poly(m.argmax[0], m.argmax[1], m.argmax[2], p), m.value, 1e-15);
    EXPECT_NEAR(m.argmax[0] + m.argmax[1] + m.argmax[2], 1.0, 1e-12);
  }
}

TEST(Polynomials, DomainErrors) {
  EXPECT_THROW(g_star(-1.0), DomainError);
  EXPECT_THROW(h_star(-0.1), DomainError);
}

TEST(Polynomials, StarPolynomial) {
  EXPECT_NEAR(star_poly({0.25, 0.25, 0.25, 0.25}, 2.0), 3.0 / 16.0, 1e-15);
  EXPECT_NEAR(star_poly({0.5, 0.5}, 3.0), g_poly(0.5, 0.5, 3.0), 1e-15);
}
