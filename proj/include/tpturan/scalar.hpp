#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "tpturan/core.hpp"

namespace tpturan {

// g_p(x1, x2) = x1^p x2 + x1 x2^p
inline double g_poly(double x1, double x2, double p) { return power(x1, p) * x2 + x1 * power(x2, p); }

// h_p(x1, x2, x3) = x1 x2 x3^p + x1 x2^p x3 + x1^p x2 x3
inline double h_poly(double x1, double x2, double x3, double p) {
  return x1 * x2 * power(x3, p) + x1 * power(x2, p) * x3 + power(x1, p) * x2 * x3;
}

// sum over i < j of x_i x_j^p + x_i^p x_j
inline double star_poly(const std::vector<double>& x, double p) {
  CompensatedSum s;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) s += g_poly(x[i], x[j], p);
  return s.value();
}

struct ScalarMax {
  std::vector<double> argmax;
  double value = 0.0;
  double bracket_lo = 0.0;  // final search interval of the (outer) variable
  double bracket_hi = 0.0;
};

struct LineMax {
  double x = 0.0;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// Grid seeding followed by golden-section refinement around the best sample.
inline LineMax maximize_on_interval(const std::function<double(double)>& f, double lo, double hi, int samples = 32,
                                    int budget = 200, double width_tol = 1e-13) {
  LineMax best{lo, f(lo), lo, hi};
  if (!(hi > lo)) return best;
  int best_i = 0;
  for (int i = 1; i <= samples; ++i) {
    double x = i == samples ? hi : lo + (hi - lo) * i / samples;
    double v = f(x);
    if (v > best.value) {
      best = {x, v, lo, hi};
      best_i = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best_i - 1) / samples;
  double b = best_i + 1 >= samples ? hi : lo + (hi - lo) * (best_i + 1) / samples;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < budget && (b - a) > width_tol * (1.0 + std::fabs(a)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc > best.value) best = {c, fc, a, b};
  if (fd > best.value) best = {d, fd, a, b};
  best.lo = a;
  best.hi = b;
  return best;
}

// g_p^* = max over the 1-simplex of g_p, searched on x1 in [0, 1/2].
inline ScalarMax g_star(double p) {
  if (!(p >= 0.0)) throw DomainError("g_star needs p >= 0");
  auto f = [p](double x) { return g_poly(x, 1.0 - x, p); };
  LineMax m = maximize_on_interval(f, 0.0, 0.5, 64);
  // The value is flat near the peak; pin the argmax down through the derivative's sign change.
  auto slope = [p](double x) {
    const double y = 1.0 - x;
    return p * power(x, p - 1.0) * y - power(x, p) + power(y, p) - p * x * power(y, p - 1.0);
  };
  if (p > 1.0) {
    double a = std::max(1e-300, m.x - 1e-5), b = std::min(0.5, m.x + 1e-5);
    if (slope(a) > 0.0 && slope(b) < 0.0) {
      for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
        const double mid = 0.5 * (a + b);
        (slope(mid) > 0.0 ? a : b) = mid;
      }
      const double x = 0.5 * (a + b);
      if (f(x) >= m.value) m = {x, f(x), a, b};
      else m.x = x;
    }
  }
  return {{m.x, 1.0 - m.x}, m.value, m.lo, m.hi};
}

namespace detail {

inline ScalarMax compute_h_star(double p) {
  // By symmetry take x1 <= x2 <= x3; the outer variable is x3 in [1/3, 1].
  auto inner = [p](double x3) {
    const double s = 1.0 - x3;
    const double lo = std::max(0.0, s - x3);
    const double hi = s / 2.0;
    return maximize_on_interval([&](double x1) { return h_poly(x1, s - x1, x3, p); }, lo, hi, 24, 200, 1e-12);
  };
  LineMax outer = maximize_on_interval([&](double x3) { return inner(x3).value; }, 1.0 / 3.0, 1.0, 32, 200, 1e-12);
  LineMax in = inner(outer.x);
  const double x3 = outer.x, x1 = in.x, x2 = 1.0 - x3 - x1;
  return {{x1, x2, x3}, in.value, outer.lo, outer.hi};
}

}  // namespace detail

// h_p^* = max over the 2-simplex of h_p. Memoized per exact p.
inline ScalarMax h_star(double p) {
  if (!(p >= 0.0)) throw DomainError("h_star needs p >= 0");
  static std::mutex mutex;
  static std::map<double, ScalarMax> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  ScalarMax m = detail::compute_h_star(p);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(p, m);
  return m;
}

// Whether the maximizer of g_p on [0, 1/2] lies strictly inside (1/(p+1), 1/(p-1)).
inline bool star_argmax_interval_check(double p) {
  if (!(p > 3.0)) throw DomainError("the argmax interval statement needs p > 3");
  const double x = g_star(p).argmax[0];
  return x > 1.0 / (p + 1.0) && x < 1.0 / (p - 1.0);
}

}  // namespace tpturan
