#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tpturan/scalar.hpp"

namespace tpturan {

struct InequalityCheck {
  std::string id;
  std::string statement;
  std::vector<std::string> parameter_names;
  std::vector<std::vector<double>> points;
  std::vector<double> margins;
  double worst_margin = 0.0;
  std::vector<double> worst_point;
  bool passed = false;
  std::string note;

  void add(std::vector<double> point, double margin) {
    if (points.empty() || margin < worst_margin || std::isnan(margin)) {
      worst_margin = margin;
      worst_point = point;
    }
    points.push_back(std::move(point));
    margins.push_back(margin);
  }
  void finish() {
    passed = !margins.empty();
    std::size_t failing = 0, first = 0;
    for (std::size_t i = 0; i < margins.size(); ++i)
      if (!(margins[i] > 0.0)) {  // NaN fails
        if (failing++ == 0) first = i;
      }
    passed = passed && failing == 0;
    if (failing > 0) {
      std::ostringstream s;
      s.precision(10);
      s << failing << " of " << margins.size() << " points fail, first at (";
      for (std::size_t j = 0; j < points[first].size(); ++j) s << (j ? ", " : "") << points[first][j];
      s << ")";
      note = note.empty() ? s.str() : note + "; " + s.str();
    }
  }
};

// Arithmetic parameter grid lo, lo+step, ..., hi; `open_lo` drops lo itself.
struct ParamGrid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.01;
  bool open_lo = false;

  std::vector<double> values() const {
    if (!(step > 0) || hi < lo) throw ParameterError("grid needs step > 0 and hi >= lo");
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> out;
    for (long long i = open_lo ? 1 : 0; i <= count; ++i) out.push_back(snap(lo + static_cast<double>(i) * step));
    return out;
  }

  // Snaps grid values to 1e-10 so p and p - 1 from different grids coincide exactly.
  static double snap(double x) { return std::round(x * 1e10) / 1e10; }

  // "lo:hi:step", with an optional leading '(' for an open lower end.
  static ParamGrid parse(std::string text) {
    ParamGrid g;
    if (!text.empty() && text[0] == '(') {
      g.open_lo = true;
      text = text.substr(1);
    }
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
      try {
        parts.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ParameterError("bad grid component '" + item + "'");
      }
    }
    if (parts.size() != 3) throw ParameterError("grid must look like lo:hi:step");
    g.lo = parts[0];
    g.hi = parts[1];
    g.step = parts[2];
    g.values();
    return g;
  }
};

namespace detail {

inline constexpr double kE = std::numbers::e;

// Slack that lets a non-strict inequality survive rounding at equality points.
inline double rounding_slack(double a, double b) { return 1e-12 * std::max({1e-300, std::fabs(a), std::fabs(b)}); }

inline double h_at_skewed_point(double p) {
  const double a = 1.0 / (p + 2.0);
  return h_poly(a, a, p / (p + 2.0), p);
}

inline double main_ratio(double p) {
  const double hp = h_star(p).value;
  const double hp1 = h_star(ParamGrid::snap(p - 1.0)).value;
  const double gp = g_star(p).value;
  return (p * hp1 + gp) / ((p + 2.0) * hp);
}

inline double base_case_bound(double p) {
  const long double lp = p;
  const long double num = lp * std::pow(0.5L, 2.0L - lp) * std::pow(1.0L / 9.0L, lp - 1.0L) + std::pow(4.0L, 1.0L - lp);
  const long double den = (lp + 2.0L) * std::pow(1.0L / 3.0L, lp + 1.0L);
  return static_cast<double>(num / den / (1.0L - 1e-3L));
}

inline double case1_bound(double p) {
  const long double lp = p;
  const long double e = kE;
  const long double a = std::max(std::pow(2.0L, 1.0L - lp), std::pow((lp - 1.0L) / lp, lp - 4.0L) / 8.0L);
  const long double b = std::max(std::pow(2.0L, -lp), std::pow(lp / (lp + 1.0L), lp - 3.0L) / 8.0L);
  return static_cast<double>((3.0L / (2.0L * e) * a + b) / ((lp + 2.0L) * h_at_skewed_point(p)));
}

// The six factors of the closed-form case-2 bound, in the order they appear.
inline std::vector<double> case2_factors(double p) {
  return {((p - 1) * (p - 1) + 3) / ((p - 1) * (p - 1) - 1),
          (p + 2) * (p - 3) / std::pow(p - 2, p),
          (p + 2) / (p - 2),
          (p * p - p + 2) / ((p - 2) * (p + 1)),
          (p + 2) * (p - 2) / std::pow(p - 1, p + 1),
          (p + 2) / (p - 1)};
}

inline double case2_bound(double p) {
  const auto f = case2_factors(p);
  const long double e = kE;
  CompensatedSum s;
  s += static_cast<double>(1.5L * e * f[0] * (f[1] + f[2] / e));
  s += static_cast<double>(f[3] * (f[4] + f[5] / e) * e * e);
  return s.value();
}

inline double case2_endpoint_value() {
  const long double e = kE;
  CompensatedSum s;
  s += static_cast<double>(65.0L / 24.0L);
  s += static_cast<double>(72163555.0L * e / 47029248.0L);
  s += static_cast<double>(580.0L * e * e / 363182463.0L);
  return s.value();
}

inline double skew_g(double p) { return g_poly(1.0 / (p - 1.0), (p - 2.0) / (p - 1.0), p); }

}  // namespace detail

inline const std::vector<std::string>& inequality_ids() {
  static const std::vector<std::string> ids = {
      "L52_main", "L52_base", "L52_case1", "L52_case2", "L52_case2_endpoint", "L52_case2_monotone",
      "L55",      "L56_i",    "L56_ii",    "L57_i",     "L57_ii",             "L57_iii",
      "L57_iv",   "F2_10",    "F2_11",     "L54"};
  return ids;
}

inline ParamGrid default_grid(const std::string& id) {
  if (id == "L52_main") return {2.0, 50.0, 0.01};
  if (id == "L52_base") return {1.0, 2.0, 0.01, true};
  if (id == "L52_case1") return {2.0, 8.0, 0.01};
  if (id == "L52_case2") return {8.0, 50.0, 0.01};
  if (id == "L52_case2_endpoint") return {8.0, 8.0, 1.0};
  if (id == "L52_case2_monotone") return {8.0, 50.0, 1.0};
  if (id == "L55") return {3.01, 50.0, 0.01};
  if (id == "L56_i") return {2.0, 3.0, 0.01};
  if (id == "L56_ii") return {3.0, 50.0, 0.01, true};
  if (id == "L57_i") return {0.0, 50.0, 0.01};
  if (id == "L57_ii") return {2.0, 50.0, 0.01};
  if (id == "L57_iii") return {0.0, 50.0, 0.01};
  if (id == "L57_iv") return {5.0, 50.0, 0.01};
  if (id == "F2_10") return {0.0, 50.0, 0.05, true};
  if (id == "F2_11") return {0.0, 50.0, 0.05, true};
  if (id == "L54") return {2.0, 6.0, 0.01};
  throw ParameterError("unknown inequality id '" + id + "'");
}

struct VerifyOptions {
  std::uint64_t seed = 0;
  int samples = 10000;  // random draws for L54
};

inline InequalityCheck verify(const std::string& id, const ParamGrid& grid, const VerifyOptions& opts = {}) {
  using namespace detail;
  InequalityCheck c;
  c.id = id;
  c.parameter_names = {"p"};
  const auto ps = grid.values();
  if (id == "L52_main") {
    c.statement = "(p h*_{p-1} + g*_p) / ((p+2) h*_p) < 6.88";
    for (double p : ps) {
      if (p < 2) throw DomainError("L52_main is stated for p >= 2");
      c.add({p}, 6.88 - main_ratio(p));
    }
    c.note = "checked on the finite grid only; p beyond the grid is covered by the closed-form case-2 bound "
             "(L52_case2_endpoint, L52_case2_monotone)";
  } else if (id == "L52_base") {
    c.statement = "(1/(1-1e-3)) (p (1/2)^{2-p} (1/9)^{p-1} + 4^{1-p}) / ((p+2) (1/3)^{p+1}) < 5";
    for (double p : ps) {
      if (p <= 1 || p > 2) throw DomainError("L52_base is stated on (1, 2]");
      c.add({p}, 5.0 - base_case_bound(p));
    }
  } else if (id == "L52_case1") {
    c.statement = "case-1 closed-form bound < 6.2";
    for (double p : ps) {
      if (p < 2 || p > 8) throw DomainError("L52_case1 is stated on [2, 8]");
      c.add({p}, 6.2 - case1_bound(p));
    }
  } else if (id == "L52_case2") {
    c.statement = "case-2 closed-form bound < 6.88";
    for (double p : ps) {
      if (p < 8) throw DomainError("L52_case2 is stated for p >= 8");
      c.add({p}, 6.88 - case2_bound(p));
    }
  } else if (id == "L52_case2_endpoint") {
    c.statement = "65/24 + 72163555e/47029248 + 580e^2/363182463 < 6.88";
    const double v = case2_endpoint_value();
    c.add({8.0}, 6.88 - v);
    std::ostringstream note;
    note.precision(17);
    note << "value " << v << "; closed-form bound at p=8 is " << case2_bound(8.0);
    c.note = note.str();
  } else if (id == "L52_case2_monotone") {
    c.statement = "each case-2 factor is decreasing at p = 8, 16, 32, 50";
    c.parameter_names = {"factor", "p"};
    const std::vector<double> spots = {8, 16, 32, 50};
    for (std::size_t f = 0; f < 6; ++f)
      for (std::size_t i = 0; i + 1 < spots.size(); ++i)
        c.add({double(f), spots[i]},
              case2_factors(spots[i])[f] - case2_factors(spots[i + 1])[f]);
    c.note = "spot check only; the grid argument is ignored";
  } else if (id == "L55") {
    c.statement = "argmax of g_p on [0,1/2] lies in (1/(p+1), 1/(p-1))";
    for (double p : ps) {
      if (p <= 3) throw DomainError("L55 is stated for p > 3");
      // x* sits within ~1e-18 of 1/(p+1) for large p, so compare derivative signs at the ends instead.
      const long double lp = p, up = 1.0L + lp, down = lp - 1.0L;
      const long double left = (lp - 1.0L) * std::pow(up, 1.0L - lp);  // the y - px factor vanishes here
      const long double right = std::pow(1.0L / down, lp - 1.0L) * (lp * (lp - 2.0L) - 1.0L) / down -
                                std::pow((lp - 2.0L) / down, lp - 1.0L) * 2.0L / down;
      const double x = g_star(p).argmax[0];
      const double located = 1e-9 - std::max({0.0, 1.0 / (p + 1.0) - x, x - 1.0 / (p - 1.0)});
      c.add({p}, std::min({static_cast<double>(left), static_cast<double>(-right), located}));
    }
    c.note = "margin is the smaller of the slope of g_p(x, 1-x) at 1/(p+1), minus the slope at 1/(p-1), "
             "and 1e-9 minus the distance of the numerical argmax from the interval";
  } else if (id == "L56_i") {
    c.statement = "g*_p = 2^{-p} on [2, 3]";
    for (double p : ps) {
      if (p < 2 || p > 3) throw DomainError("L56_i is stated on [2, 3]");
      const double exact = std::pow(2.0, -p);
      c.add({p}, 1e-13 - std::fabs(g_star(p).value - exact));
    }
    c.note = "equality checked to absolute tolerance 1e-13";
  } else if (id == "L56_ii") {
    c.statement = "g*_p <= (1/8) (p/(p+1))^{p-3} for p > 3";
    for (double p : ps) {
      if (p <= 3) throw DomainError("L56_ii is stated for p > 3");
      const double bound = std::pow(p / (p + 1.0), p - 3.0) / 8.0;
      const double g = g_star(p).value;
      c.add({p}, bound - g + rounding_slack(bound, g));
    }
  } else if (id == "L57_i") {
    c.statement = "h*_p >= h_p(1/(p+2), 1/(p+2), p/(p+2)) > 1/(e^2 (p+2)^2)";
    for (double p : ps) {
      const double h = h_star(p).value;
      const double mid = h_at_skewed_point(p);
      const double low = 1.0 / (kE * kE * (p + 2.0) * (p + 2.0));
      c.add({p}, std::min(h - mid + rounding_slack(h, mid), mid - low));
    }
  } else if (id == "L57_ii") {
    c.statement = "g_p(1/(p-1), (p-2)/(p-1)) < (p-2)/(p-1)^{p+1} + 1/(e(p-1))";
    for (double p : ps) {
      if (p < 2) throw DomainError("L57_ii needs p >= 2 for real powers");
      const double rhs = (p - 2.0) / std::pow(p - 1.0, p + 1.0) + 1.0 / (kE * (p - 1.0));
      c.add({p}, rhs - skew_g(p));
    }
  } else if (id == "L57_iii") {
    c.statement = "h*_p < 3 g*_p / (2e(p+1))";
    for (double p : ps) c.add({p}, 3.0 * g_star(p).value / (2.0 * kE * (p + 1.0)) - h_star(p).value);
  } else if (id == "L57_iv") {
    c.statement = "g*_p <= (p^2-p+2)/((p-2)(p+1)) g_p(1/(p-1), (p-2)/(p-1)) for p >= 5";
    for (double p : ps) {
      if (p < 5) throw DomainError("L57_iv is stated for p >= 5");
      const double rhs = (p * p - p + 2.0) / ((p - 2.0) * (p + 1.0)) * skew_g(p);
      const double g = g_star(p).value;
      c.add({p}, rhs - g + rounding_slack(rhs, g));
    }
  } else if (id == "F2_10") {
    c.statement = "p in (0,1): 1-px-(1-p)x^2 <= (1-x)^p <= 1-px; p > 1: 1-px <= (1-x)^p <= 1-px+p^2x^2; "
                  "|(1-x)^p-(1-px)| <= (p^2+1)x^2";
    c.parameter_names = {"p", "x"};
    for (double p : ps) {
      if (p <= 0 || p == 1.0) continue;
      for (int i = 1; i <= 99; ++i) {
        const long double x = i / 100.0L, lp = p;
        const long double y = std::pow(1.0L - x, lp);
        long double m;
        if (p < 1)
          m = std::min(y - (1.0L - lp * x - (1.0L - lp) * x * x), (1.0L - lp * x) - y);
        else
          m = std::min(y - (1.0L - lp * x), (1.0L - lp * x + lp * lp * x * x) - y);
        m = std::min(m, (lp * lp + 1.0L) * x * x - std::fabs(y - (1.0L - lp * x)));
        c.add({p, static_cast<double>(x)}, static_cast<double>(m));
      }
    }
    c.note = "x on 0.01..0.99; the equality cases x = 0 and p = 1 are excluded";
  } else if (id == "F2_11") {
    c.statement = "(i) (1-x)^p >= 1 - x^p for p in (0,1); (ii) x(1-x)^p <= p^p/(1+p)^{1+p}, equality at x = 1/(1+p)";
    c.parameter_names = {"p", "x"};
    for (double p : ps) {
      if (p <= 0) continue;
      const long double lp = p;
      const long double bound = std::pow(lp, lp) / std::pow(1.0L + lp, 1.0L + lp);
      for (int i = 1; i <= 99; ++i) {
        const long double x = i / 100.0L;
        long double m = bound - x * std::pow(1.0L - x, lp) + rounding_slack(double(bound), 0);
        if (p < 1) m = std::min(m, std::pow(1.0L - x, lp) - (1.0L - std::pow(x, lp)));
        c.add({p, static_cast<double>(x)}, static_cast<double>(m));
      }
      // The maximum is attained, at 1/(1+p).
      auto peak = maximize_on_interval([&](double x) { return x * std::pow(1.0 - x, p); }, 0.0, 1.0, 64);
      const double at = 1.0 / (1.0 + p);
      const double m = std::min(1e-12 - std::fabs(peak.value - double(bound)), 1e-6 - std::fabs(peak.x - at));
      c.add({p, at}, m);
    }
  } else if (id == "L54") {
    c.statement = "sum_{i<j} (x_i x_j^p + x_i^p x_j) <= g*_p for x on the simplex, n <= 10";
    c.parameter_names = {"p", "n"};
    Rng rng(opts.seed);
    const double lo = ps.front(), hi = ps.back();
    if (lo < 2) throw DomainError("L54 is stated for p >= 2");
    for (int s = 0; s < opts.samples; ++s) {
      const double p = ParamGrid::snap(rng.uniform(lo, hi));
      const std::size_t n = 2 + rng.below(9);
      auto x = rng.dirichlet_one(n);
      const double g = g_star(p).value;
      c.add({p, double(n)}, g - star_poly(x, p) + 1e-9);
    }
    c.note = "random samples; the grid only sets the p range";
  } else {
    throw ParameterError("unknown inequality id '" + id + "'");
  }
  c.finish();
  return c;
}

inline InequalityCheck verify(const std::string& id) { return verify(id, default_grid(id)); }

struct BranchMax {
  double value = 0.0;
  double argmax = 0.0;
  bool second_branch_binds = false;  // x(1-x)^p is the smaller branch at the argmax
};

// max over x in [0,1] of min{x^{1+p/2}/6^{p/2}, x(1-x)^p}
inline BranchMax f5_pi_upper_detail(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("f5_pi_upper needs p in (0, 1]");
  auto b1 = [p](double x) { return std::pow(x, 1.0 + p / 2.0) / std::pow(6.0, p / 2.0); };
  auto b2 = [p](double x) { return x * std::pow(1.0 - x, p); };
  auto diff = [&](double x) { return b1(x) - b2(x); };
  std::vector<double> breaks = {0.0};
  const int samples = 2000;
  for (int i = 1; i < samples; ++i) {
    double a = double(i) / samples, b = double(i + 1) / samples;
    if ((diff(a) < 0) != (diff(b) < 0)) {
      for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
        double m = 0.5 * (a + b);
        if ((diff(m) < 0) == (diff(a) < 0))
          a = m;
        else
          b = m;
      }
      breaks.push_back(0.5 * (a + b));
    }
  }
  breaks.push_back(1.0);
  BranchMax best;
  auto f = [&](double x) { return std::min(b1(x), b2(x)); };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    auto m = maximize_on_interval(f, breaks[i], breaks[i + 1], 32);
    for (double x : {breaks[i], breaks[i + 1]})
      if (f(x) > m.value) m = {x, f(x), m.lo, m.hi};
    if (m.value > best.value) best = {m.value, m.x, b2(m.x) <= b1(m.x)};
  }
  return best;
}

inline double f5_pi_upper(double p) { return f5_pi_upper_detail(p).value; }

struct ExpansionPi {
  double closed_form = 0.0;
  double optimized = 0.0;
  double argmax = 0.0;
};

inline ExpansionPi expansion_pi_small_p_detail(unsigned l, unsigned r, unsigned t, double p) {
  if (!(l >= r && r > t && t >= 1)) throw ParameterError("need l >= r > t >= 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("expansion bound needs p in (0, 1)");
  const double tl = factorial(t) * double(binomial(l, t));
  ExpansionPi out;
  out.closed_form = tl * std::pow(double(binomial(l - t, r - t)), p) * std::pow(1.0 / l, t + p * (r - t));
  const double rl = factorial(r) * double(binomial(l, r));
  const double rest = std::pow(factorial(r - t), p);
  auto chain = [&](double x) {
    return std::pow(rl * std::pow(x / tl, double(r) / t), p) * std::pow(x, 1.0 - p) / rest;
  };
  const double cap = tl * std::pow(double(l), -double(t));
  auto m = maximize_on_interval(chain, 0.0, cap, 64);
  if (chain(cap) >= m.value) m = {cap, chain(cap), m.lo, m.hi};
  out.optimized = m.value;
  out.argmax = m.x;
  return out;
}

inline double expansion_pi_small_p(unsigned l, unsigned r, unsigned t, double p) {
  return expansion_pi_small_p_detail(l, r, t, p).closed_form;
}

// Piecewise-linear profile through the points ((k-1)/k, (k-1)/k^2).
inline double appendix_c_piece(int i, double x) {
  const double di = i;
  return -(di * di - di - 1.0) / (di * (di + 1.0)) * x + (di - 1.0) / (di + 1.0);
}

inline double appendix_c_profile(double x) {
  if (x < 0.0 || x >= 1.0) throw DomainError("profile defined on [0, 1)");
  const int i = static_cast<int>(std::floor(1.0 / (1.0 - x)));  // x in [(i-1)/i, i/(i+1))
  return appendix_c_piece(std::max(1, i), x);
}

// max over x in [0,1) of profile(x)^p x^{1-p}, piece by piece.
inline double appendix_c_g(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("appendix_c_g needs p in [0, 1)");
  if (p == 0.0) return 1.0;  // sup of x on [0,1), not attained
  const double cutoff = (std::sqrt(4.0 * p + 1.0) + 1.0) / (2.0 * p);
  const int pieces = static_cast<int>(std::ceil(cutoff)) + 2;
  double best = 0.0;
  for (int i = 1; i <= pieces; ++i) {
    const double lo = double(i - 1) / i, hi = double(i) / (i + 1);
    auto f = [&](double x) { return std::pow(appendix_c_piece(i, x), p) * std::pow(x, 1.0 - p); };
    // Weighted geometric mean of two affine functions: concave, so golden section is exact.
    auto m = maximize_on_interval(f, lo, hi, 8);
    best = std::max({best, m.value, f(lo), f(hi)});
  }
  return best;
}

// Checks g(p) = (k-1)/k^{p+1} on samples of [1/(k-1), (k-1)/(k(k-2))), using the appendix's own k.
inline InequalityCheck verify_appendix_c(unsigned k, int samples = 25) {
  if (k < 3) throw ParameterError("verify_appendix_c needs k >= 3");
  InequalityCheck c;
  c.id = "appendix_c_k" + std::to_string(k);
  c.statement = "g(p) = (k-1)/k^{p+1} on [1/(k-1), (k-1)/(k(k-2)))";
  c.parameter_names = {"p"};
  const double lo = 1.0 / (k - 1.0), hi = (k - 1.0) / (k * (k - 2.0));
  for (int j = 0; j < samples; ++j) {
    const double p = lo + (hi - lo) * j / samples;
    if (p >= 1.0) continue;
    const double expected = (k - 1.0) / std::pow(double(k), p + 1.0);
    c.add({p}, 1e-9 - std::fabs(appendix_c_g(p) - expected));
  }
  c.finish();
  return c;
}

// Containment of [1/k, 1/k + 1/(k^3-k)] in the appendix window for the
// appendix index k + 1, i.e. [1/k, k/(k^2-1)).
inline InequalityCheck alpha_k_window_check(unsigned k) {
  if (k < 6 || (k % 6 != 0 && k % 6 != 2)) throw DomainError("k must lie in 6N + {0, 2}");
  InequalityCheck c;
  c.id = "alpha_k" + std::to_string(k);
  c.statement = "[1/k, 1/k + 1/(k^3-k)] inside the closure of [1/k, k/(k^2-1)), with the identity holding at the end";
  c.parameter_names = {"p"};
  const long long kk = k;
  // Right ends as exact fractions over the common denominator k(k^2-1).
  const long long den = kk * (kk * kk - 1);
  const long long claimed = (kk * kk - 1) + 1;  // 1/k + 1/(k^3-k)
  const long long window = kk * kk;              // k/(k^2-1)
  const double left = 1.0 / kk;
  const double right = double(claimed) / double(den);
  const unsigned appendix_k = k + 1;
  const double formula = double(k) / std::pow(double(appendix_k), right + 1.0);
  c.add({left}, 1.0);  // left ends agree exactly: 1/(appendix_k - 1) = 1/k
  if (claimed < window) {
    c.add({right}, double(window - claimed) / double(den));
  } else if (claimed == window) {
    // Tight: the claimed end is the excluded end; the identity extends there by continuity.
    c.add({right}, 1e-9 - std::fabs(appendix_c_g(right) - formula));
    c.note = "tight: 1/k + 1/(k^3-k) equals k/(k^2-1) exactly; containment holds in the closure";
  } else {
    c.add({right}, -double(claimed - window) / double(den));
  }
  c.finish();
  return c;
}

}  // namespace tpturan
