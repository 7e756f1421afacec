#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "tpturan/hypergraph.hpp"

namespace tpturan {

// A point of the standard simplex.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    CompensatedSum s;
    for (double x : w_) {
      if (!(x >= 0.0) || !std::isfinite(x)) throw ParameterError("weights must be finite and non-negative");
      s += x;
    }
    if (std::fabs(s.value() - 1.0) > 1e-12) throw ParameterError("weights must sum to 1");
  }
  static WeightVector barycenter(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0 / n)); }
  const std::vector<double>& values() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  std::vector<double> w_;
};

// The shadow of G with the link of every member, laid out flat for evaluation.
class LagrangeForm {
 public:
  LagrangeForm(const RGraph& g, unsigned t) : n_(g.vertex_count()), r_(g.uniformity()), t_(t) {
    if (t < 1 || t >= r_) throw ParameterError("t must satisfy 1 <= t < r");
    const SubsetCodec codec(n_);
    codec.require(r_);
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<std::vector<Vertex>> links;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      auto e = g.edge(i);
      for_each_subset(e, t, [&](std::span<const Vertex> s) {
        auto [it, fresh] = index.emplace(codec.pack(s), index.size());
        if (fresh) {
          term_vertices_.insert(term_vertices_.end(), s.begin(), s.end());
          links.emplace_back();
        }
        auto& l = links[it->second];
        std::size_t c = 0;
        for (auto v : e) {
          if (c < s.size() && s[c] == v)
            ++c;
          else
            l.push_back(v);
        }
      });
    }
    link_offsets_.push_back(0);
    for (auto& l : links) {
      link_vertices_.insert(link_vertices_.end(), l.begin(), l.end());
      link_offsets_.push_back(link_vertices_.size() / (r_ - t_));
    }
  }

  std::size_t dimension() const { return n_; }
  unsigned uniformity() const { return r_; }
  unsigned t() const { return t_; }
  std::size_t term_count() const { return link_offsets_.size() - 1; }

  double value(std::span<const double> x, double p) const {
    check(x);
    CompensatedSum total;
    const unsigned s = r_ - t_;
    for (std::size_t k = 0; k < term_count(); ++k) {
      double xt = 1.0;
      for (unsigned j = 0; j < t_; ++j) xt *= x[term_vertices_[k * t_ + j]];
      if (xt == 0.0) continue;
      double w = 0.0;
      for (std::size_t l = link_offsets_[k]; l < link_offsets_[k + 1]; ++l) {
        double xi = 1.0;
        for (unsigned j = 0; j < s; ++j) xi *= x[link_vertices_[l * s + j]];
        w += xi;
      }
      total += xt * power(w, p);
    }
    return total.value();
  }

  // Analytic partials. `floor` bounds link sums from below inside W^(p-1) only.
  std::vector<double> gradient(std::span<const double> x, double p, double floor = 0.0) const {
    check(x);
    std::vector<double> grad(n_, 0.0);
    const unsigned s = r_ - t_;
    std::vector<double> dw(n_, 0.0);
    std::vector<Vertex> touched;
    for (std::size_t k = 0; k < term_count(); ++k) {
      const Vertex* tv = &term_vertices_[k * t_];
      double w = 0.0;
      touched.clear();
      for (std::size_t l = link_offsets_[k]; l < link_offsets_[k + 1]; ++l) {
        const Vertex* iv = &link_vertices_[l * s];
        double xi = 1.0;
        for (unsigned j = 0; j < s; ++j) xi *= x[iv[j]];
        w += xi;
        if (p == 0.0) continue;
        for (unsigned j = 0; j < s; ++j) {
          double rest = 1.0;
          for (unsigned m = 0; m < s; ++m)
            if (m != j) rest *= x[iv[m]];
          if (dw[iv[j]] == 0.0 && rest != 0.0) touched.push_back(iv[j]);
          dw[iv[j]] += rest;
        }
      }
      const double wp = power(w, p);
      for (unsigned j = 0; j < t_; ++j) {
        double rest = 1.0;
        for (unsigned m = 0; m < t_; ++m)
          if (m != j) rest *= x[tv[m]];
        grad[tv[j]] += rest * wp;
      }
      if (p == 0.0) continue;
      double xt = 1.0;
      for (unsigned j = 0; j < t_; ++j) xt *= x[tv[j]];
      if (xt != 0.0) {
        const double outer = p == 1.0 ? 1.0 : std::pow(std::max(w, floor), p - 1.0);
        for (auto v : touched) grad[v] += xt * p * outer * dw[v];
      }
      for (auto v : touched) dw[v] = 0.0;
    }
    return grad;
  }

  // Induced form on a vertex subset, relabelled in order.
  static LagrangeForm induced(const RGraph& g, unsigned t, const std::vector<Vertex>& keep) {
    return LagrangeForm(induced_subgraph(g, keep), t);
  }

 private:
  void check(std::span<const double> x) const {
    if (x.size() != n_) throw ParameterError("weight vector has wrong dimension");
  }

  std::size_t n_;
  unsigned r_;
  unsigned t_;
  std::vector<Vertex> term_vertices_;
  std::vector<std::size_t> link_offsets_;
  std::vector<Vertex> link_vertices_;
};

// L_{G,t,p} at an arbitrary non-negative point (no simplex constraint).
inline double eval_lagrange_unnormalized(const RGraph& g, const TpParams& params, std::span<const double> x) {
  params.validate(g.uniformity());
  if (x.size() != g.vertex_count()) throw ParameterError("weight vector has wrong dimension");
  for (double xi : x)
    if (!(xi >= 0.0)) throw ParameterError("weights must be non-negative");
  return LagrangeForm(g, params.t).value(x, params.p);
}

inline double eval_lagrange(const RGraph& g, const TpParams& params, const WeightVector& x) {
  return eval_lagrange_unnormalized(g, params, x.values());
}

struct Gradient {
  std::vector<double> partials;
  bool finite = true;
};

inline Gradient grad_lagrange(const RGraph& g, const TpParams& params, std::span<const double> x, double floor = 0.0) {
  params.validate(g.uniformity());
  if (x.size() != g.vertex_count()) throw ParameterError("weight vector has wrong dimension");
  Gradient out;
  out.partials = LagrangeForm(g, params.t).gradient(x, params.p, floor);
  for (double d : out.partials) out.finite &= std::isfinite(d);
  return out;
}

// Euclidean projection onto the standard simplex.
inline std::vector<double> project_to_simplex(std::span<const double> y) {
  std::vector<double> u(y.begin(), y.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0) theta = candidate;
  }
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = std::max(0.0, y[i] - theta);
  double s = 0.0;
  for (double xi : x) s += xi;
  for (double& xi : x) xi /= s;
  return x;
}

struct MaximizeOptions {
  int restarts = 16;
  int grid_depth = 0;        // barycentric grid denominator for extra seeds (0 = automatic)
  double tolerance = 1e-7;
  std::uint64_t seed = 0;
  int max_iterations = 20000;
  unsigned threads = 1;
  double support_threshold = 1e-8;
};

struct LagrangianResult {
  double value = 0.0;
  std::vector<double> maximizer;
  std::vector<Vertex> support;
  double kkt_residual = 0.0;
  bool two_covered = false;
  bool converged = true;
  bool best_effort = false;  // p < 1: no smoothness guarantee
  std::string warning;
};

struct KktReport {
  std::vector<double> partials;
  std::vector<Vertex> support;
  double residual = 0.0;
  bool two_covered = false;
};

inline KktReport kkt_report(const RGraph& g, const TpParams& params, std::span<const double> x,
                            double support_threshold = 1e-8) {
  params.validate(g.uniformity());
  LagrangeForm form(g, params.t);
  KktReport rep;
  rep.partials = form.gradient(x, params.p, params.p < 1 ? 1e-300 : 0.0);
  const double target = params.exponent(g.uniformity()) * form.value(x, params.p);
  for (Vertex i = 0; i < x.size(); ++i)
    if (x[i] > support_threshold) rep.support.push_back(i);
  for (auto i : rep.support) rep.residual = std::max(rep.residual, std::fabs(rep.partials[i] - target));
  rep.two_covered = is_two_covered(g, rep.support);
  return rep;
}

namespace detail {

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
};

// Projected gradient ascent with Armijo backtracking.
inline AscentResult projected_ascent(const LagrangeForm& form, double p, std::vector<double> x, int max_iterations) {
  const double floor = p < 1.0 ? 1e-300 : 0.0;
  double f = form.value(x, p);
  double step = 1.0;
  AscentResult out;
  for (int it = 0; it < max_iterations; ++it) {
    auto g = form.gradient(x, p, floor);
    double gmax = 0.0;
    for (double gi : g) gmax = std::max(gmax, std::fabs(gi));
    if (!std::isfinite(gmax)) break;
    if (gmax == 0.0) {
      out.converged = true;
      break;
    }
    step = std::min(step * 4.0, 1e6 / gmax);
    bool accepted = false;
    std::vector<double> y(x.size());
    double fy = f, moved = 0.0;
    for (int back = 0; back < 100; ++back) {
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + step * g[i];
      y = project_to_simplex(y);
      double ascent = 0.0;
      moved = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        ascent += g[i] * (y[i] - x[i]);
        moved = std::max(moved, std::fabs(y[i] - x[i]));
      }
      fy = form.value(y, p);
      if (std::isfinite(fy) && fy >= f + 1e-4 * ascent) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    const double gain = fy - f;
    x = std::move(y);
    f = fy;
    if (moved < 1e-15 || (gain <= 1e-17 * std::max(1.0, std::fabs(f)) && moved < 1e-12)) {
      out.converged = true;
      break;
    }
  }
  out.x = std::move(x);
  out.value = f;
  return out;
}

inline void enumerate_grid(std::size_t n, int depth, const std::function<void(const std::vector<double>&)>& f) {
  std::vector<int> counts(n, 0);
  std::vector<double> point(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      counts[i] = left;
      for (std::size_t j = 0; j < n; ++j) point[j] = static_cast<double>(counts[j]) / depth;
      f(point);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
  };
  if (n > 0) rec(0, depth);
}

}  // namespace detail

inline LagrangianResult maximize_lagrangian(const RGraph& g, const TpParams& params, const MaximizeOptions& opts = {}) {
  params.validate(g.uniformity());
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("Lagrangian of a graph without vertices");
  const double p = params.p;
  LagrangeForm form(g, params.t);
  LagrangianResult res;
  res.best_effort = p < 1.0;

  if (g.edge_count() == 0) {
    res.maximizer.assign(n, 1.0 / n);
    for (Vertex i = 0; i < n; ++i) res.support.push_back(i);
    res.two_covered = n <= 1;
    return res;
  }

  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 1.0 / n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    std::vector<double> x(n, 0.0);
    for (auto v : g.edge(i)) x[v] = 1.0 / g.uniformity();
    starts.push_back(std::move(x));
  }
  for (int k = 0; k < opts.restarts; ++k) {
    Rng rng(opts.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k) + 1);
    starts.push_back(rng.dirichlet_one(n));
  }
  int depth = opts.grid_depth;
  if (depth == 0 && p < 1.0) depth = 12;
  if (depth > 0 && binomial(n + depth - 1, n - 1) <= 200000) {
    std::vector<std::pair<double, std::vector<double>>> best_grid;
    detail::enumerate_grid(n, depth, [&](const std::vector<double>& pt) {
      double v = form.value(pt, p);
      if (best_grid.size() < 4 || v > best_grid.back().first) {
        best_grid.emplace_back(v, pt);
        std::sort(best_grid.begin(), best_grid.end(), [](auto& a, auto& b) { return a.first > b.first; });
        if (best_grid.size() > 4) best_grid.pop_back();
      }
    });
    for (auto& [v, pt] : best_grid) starts.push_back(pt);
  }

  std::vector<detail::AscentResult> runs(starts.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) runs[i] = detail::projected_ascent(form, p, starts[i], opts.max_iterations);
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    work(0, starts.size());
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (starts.size() + threads - 1) / threads;
    for (std::size_t lo = 0; lo < starts.size(); lo += chunk)
      jobs.push_back(std::async(std::launch::async, work, lo, std::min(starts.size(), lo + chunk)));
    for (auto& j : jobs) j.get();
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].value > runs[best].value) best = i;
  std::vector<double> x = runs[best].x;
  double value = runs[best].value;
  bool converged = runs[best].converged;

  // Merge uncovered pairs of the support, then polish on the support.
  const auto covered = covered_pairs(g);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<Vertex> support;
    for (Vertex i = 0; i < n; ++i)
      if (x[i] > opts.support_threshold) support.push_back(i);
    bool merged = false;
    for (std::size_t a = 0; a < support.size() && !merged; ++a)
      for (std::size_t b = a + 1; b < support.size() && !merged; ++b) {
        const Vertex u = support[a], v = support[b];
        if (covered[u * n + v]) continue;
        std::vector<double> y = x, z = x;
        y[u] += y[v];
        y[v] = 0.0;
        z[v] += z[u];
        z[u] = 0.0;
        const double fy = form.value(y, p), fz = form.value(z, p);
        const auto& pick = fy >= fz ? y : z;
        const double fp = std::max(fy, fz);
        if (fp >= value - 1e-13 * std::max(1.0, value)) {
          auto polished = detail::projected_ascent(form, p, pick, opts.max_iterations);
          x = polished.x;
          value = polished.value;
          merged = true;
        }
      }
    if (!merged) break;
  }
  {
    std::vector<Vertex> support;
    for (Vertex i = 0; i < n; ++i)
      if (x[i] > opts.support_threshold) support.push_back(i);
    if (support.size() < n) {
      std::vector<double> sub(support.size());
      double s = 0.0;
      for (std::size_t i = 0; i < support.size(); ++i) s += x[support[i]];
      for (std::size_t i = 0; i < support.size(); ++i) sub[i] = x[support[i]] / s;
      auto restricted = LagrangeForm::induced(g, params.t, support);
      auto polished = detail::projected_ascent(restricted, p, sub, opts.max_iterations);
      if (polished.value >= value) {
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t i = 0; i < support.size(); ++i) x[support[i]] = polished.x[i];
        value = polished.value;
        converged = converged || polished.converged;
      }
    }
  }
  res.value = value;
  res.maximizer = x;
  res.converged = converged;
  auto kkt = kkt_report(g, params, x, opts.support_threshold);
  res.support = kkt.support;
  res.kkt_residual = kkt.residual;
  res.two_covered = kkt.two_covered;
  if (!converged) res.warning = "iteration budget exhausted before convergence";
  if (res.best_effort) res.warning += res.warning.empty() ? "p < 1: best-effort maximization" : "; p < 1: best-effort maximization";
  return res;
}

}  // namespace tpturan
