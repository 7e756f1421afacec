#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tpturan/constructions.hpp"
#include "tpturan/inequalities.hpp"
#include "tpturan/lagrangian.hpp"
#include "tpturan/patterns.hpp"
#include "tpturan/search.hpp"

namespace tpturan {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool checks_passed = true;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 = no limit
  std::vector<std::string> failures;
  std::vector<std::string> details;

  bool within_limit() const { return limit_seconds <= 0.0 || seconds <= limit_seconds; }
  bool passed() const { return checks_passed && within_limit(); }
};

namespace accept_detail {

class Recorder {
 public:
  explicit Recorder(CriterionResult& out) : out_(out) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.checks_passed = false;
      if (out_.failures.size() < 20) out_.failures.push_back(what);
    }
  }
  void detail(const std::string& s) { out_.details.push_back(s); }

 private:
  CriterionResult& out_;
};

inline std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

inline RGraph random_graph(Rng& rng, std::size_t n, unsigned r, double density) {
  std::vector<Subset> edges;
  for (auto& e : all_subsets(n, r))
    if (rng.uniform() < density) edges.push_back(e);
  return RGraph(r, n, edges);
}

inline std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  rng.shuffle(perm);
  return perm;
}

inline bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline void exact_identities(Recorder& rec, std::uint64_t seed) {
  Rng rng(seed);
  const double ps[] = {0.5, 1.0, 2.0, 3.7};
  std::size_t graphs = 0;
  for (int i = 0; i < 500; ++i) {
    const unsigned r = 2 + unsigned(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform(0.1, 0.9));
    const unsigned t = 1 + unsigned(rng.below(r - 1));
    ++graphs;
    const double norm1 = tp_norm(h, {t, 1.0});
    rec.expect(norm1 == double(binomial(r, t) * h.edge_count()), "norm at p=1 differs from C(r,t)|H| on graph " +
                                                                   std::to_string(i));
    const double p = ps[rng.below(4)];
    const TpParams params{t, p};
    const double norm = tp_norm(h, params);
    auto sums = double_counting_sums(h, params);
    rec.expect(within_ulps(sums.through_v, t * norm, 8), "first double-counting sum off on graph " + std::to_string(i));
    rec.expect(within_ulps(sums.weighted, (r - t) * norm, 8),
               "second double-counting sum off on graph " + std::to_string(i));
    for (Vertex v = 0; v < n; ++v) {
      const double a = tp_degree(h, v, params, DegreeMethod::definitional);
      const double b = tp_degree(h, v, params, DegreeMethod::closed_form);
      rec.expect(within_ulps(a, b, 8), "degree modes disagree on graph " + std::to_string(i) + " vertex " +
                                           std::to_string(v) + ": " + fmt(a) + " vs " + fmt(b));
    }
  }
  rec.detail(std::to_string(graphs) + " random graphs, r in {2,3,4}, n <= 8");
}

inline void lagrangian_baselines(Recorder& rec, std::uint64_t seed) {
  MaximizeOptions opts;
  opts.seed = seed;
  auto k33 = maximize_lagrangian(complete_graph(3, 3), {2, 1.0}, opts);
  rec.expect(std::fabs(k33.value - 1.0 / 9.0) <= 1e-8, "lambda_{2,1}(K_3^3) = " + fmt(k33.value));
  rec.detail("lambda_{2,1}(K_3^3) = " + fmt(k33.value));
  for (double p : {2.0, 2.5, 3.0}) {
    auto k2 = maximize_lagrangian(complete_graph(2, 2), {1, p}, opts);
    const double g = g_star(p).value;
    rec.expect(std::fabs(k2.value - g) <= 1e-6 && std::fabs(g - std::pow(2.0, -p)) <= 1e-10,
               "lambda_{1,p}(K_2) at p=" + fmt(p) + ": " + fmt(k2.value) + " vs g* " + fmt(g));
  }
  const RGraph fano = sts(7);
  for (double p : {1.0, 2.0, 5.0}) {
    auto res = maximize_lagrangian(fano, {2, p}, opts);
    const double h = h_star(p).value;
    rec.expect(std::fabs(res.value - h) <= 1e-6, "lambda_{2,p}(Fano) at p=" + fmt(p) + ": " + fmt(res.value) +
                                                     " vs h* " + fmt(h));
    rec.expect(res.support.size() == 3, "Fano maximizer support at p=" + fmt(p) + " has " +
                                            std::to_string(res.support.size()) + " vertices");
    rec.detail("Fano p=" + fmt(p) + ": lambda " + fmt(res.value) + ", h* " + fmt(h) + ", support " +
               std::to_string(res.support.size()));
  }
}

inline void gradient_correctness(Recorder& rec, std::uint64_t seed) {
  Rng rng(seed);
  double worst_fd = 0.0, worst_euler = 0.0;
  for (int i = 0; i < 200; ++i) {
    const unsigned r = 2 + unsigned(rng.below(3));
    const std::size_t n = r + rng.below(8 - r);
    RGraph g = random_graph(rng, n, r, 0.6);
    if (g.empty()) g = complete_graph(n, r);
    const unsigned t = 1 + unsigned(rng.below(r - 1));
    const double p = rng.uniform(0.3, 4.0);
    const TpParams params{t, p};
    auto x = rng.dirichlet_one(n);
    for (auto& xi : x) xi = 0.5 * xi + 0.5 / n;  // keep away from the boundary
    auto grad = grad_lagrange(g, params, x).partials;
    double scale = 0.0;
    for (double d : grad) scale = std::max(scale, std::fabs(d));
    for (std::size_t j = 0; j < n; ++j) {
      const double step = 1e-6;
      auto up = x, down = x;
      up[j] += step;
      down[j] -= step;
      const double fd = (eval_lagrange_unnormalized(g, params, up) - eval_lagrange_unnormalized(g, params, down)) /
                        (2 * step);
      const double rel = std::fabs(fd - grad[j]) / std::max({std::fabs(grad[j]), scale, 1e-300});
      worst_fd = std::max(worst_fd, rel);
      rec.expect(rel <= 1e-4, "gradient mismatch on triple " + std::to_string(i) + " coordinate " + std::to_string(j));
    }
    CompensatedSum euler;
    for (std::size_t j = 0; j < n; ++j) euler += x[j] * grad[j];
    const double target = params.exponent(r) * eval_lagrange_unnormalized(g, params, x);
    const double rel = std::fabs(euler.value() - target) / std::max(1e-300, std::fabs(target));
    worst_euler = std::max(worst_euler, rel);
    rec.expect(rel <= 1e-9, "Euler identity off on triple " + std::to_string(i));
  }
  rec.detail("worst finite-difference relative error " + fmt(worst_fd) + ", worst Euler relative error " +
             fmt(worst_euler));
}

inline void inequality_suite(Recorder& rec) {
  for (const auto& id : {"L52_main", "L52_base", "L52_case1", "L52_case2_endpoint", "L57_i", "L57_ii", "L57_iii",
                         "L57_iv", "F2_10", "F2_11"}) {
    auto c = verify(id);
    rec.expect(c.passed, std::string(id) + " fails: worst margin " + fmt(c.worst_margin) + " (" + c.note + ")");
    rec.detail(std::string(id) + ": " + (c.passed ? "pass" : "FAIL") + ", worst margin " + fmt(c.worst_margin));
  }
}

inline void pi_reproduction(Recorder& rec, std::uint64_t seed) {
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.5 + 0.05 * i;
    const double v = f5_pi_upper(p), want = 2.0 / std::pow(3.0, 1.0 + p);
    rec.expect(std::fabs(v - want) <= 1e-8, "f5_pi_upper(" + fmt(p) + ") = " + fmt(v) + ", want " + fmt(want));
  }
  for (int k : {6, 8}) {
    const double p = 1.0 / k;
    const double v = f5_pi_upper(p), want = k / std::pow(k + 1.0, p + 1.0);
    rec.expect(std::fabs(v - want) <= 1e-8, "f5_pi_upper(1/" + std::to_string(k) + ") = " + fmt(v));
  }
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const unsigned l = 2 + unsigned(rng.below(7));
    const unsigned r = 2 + unsigned(rng.below(l - 1));
    const unsigned t = 1 + unsigned(rng.below(r - 1));
    const double p = rng.uniform(0.05, 0.95);
    auto e = expansion_pi_small_p_detail(l, r, t, p);
    const double diff = std::fabs(e.closed_form - e.optimized);
    worst = std::max(worst, diff);
    rec.expect(diff <= 1e-9 * std::max(1.0, e.closed_form), "expansion closed form vs optimization at (" +
                                                                 std::to_string(l) + "," + std::to_string(r) + "," +
                                                                 std::to_string(t) + "," + fmt(p) + ")");
  }
  rec.detail("expansion cross-check worst difference " + fmt(worst));
  for (unsigned k = 3; k <= 9; ++k) {
    auto c = verify_appendix_c(k);
    rec.expect(c.passed, c.id + " fails: " + c.note);
  }
  for (unsigned k : {6u, 8u, 12u, 14u}) {
    auto c = alpha_k_window_check(k);
    rec.expect(c.passed, c.id + " fails: " + c.note);
    if (!c.note.empty()) rec.detail(c.id + ": " + c.note);
  }
}

inline void constructions_check(Recorder& rec) {
  for (std::size_t k : {3u, 7u, 9u, 13u, 15u}) rec.expect(is_steiner_triple_system(sts(k)), "sts(" + std::to_string(k) + ") fails");
  const double p = 1.0 / 6.0;
  const double limit = 6.0 / std::pow(7.0, 7.0 / 6.0);
  double previous = 0.0;
  for (std::size_t n : {70u, 140u, 280u}) {
    RGraph h = balanced_blowup(sts(7), n);
    const double v = 2.0 * tp_norm(h, {2, p}) / std::pow(double(n), 2.0 + p);
    rec.expect(v >= previous * (1.0 - 1e-12), "Fano blowup density decreased at N=" + std::to_string(n));
    rec.expect(v <= limit * (1.0 + 1e-12), "Fano blowup density above the limit at N=" + std::to_string(n));
    previous = v;
    rec.detail("Fano N=" + std::to_string(n) + ": " + fmt(v) + " (limit " + fmt(limit) + ")");
  }
  rec.expect(std::fabs(previous - limit) / limit < 0.05, "Fano blowup gap at N=280 is 5% or more");
  for (double q : {0.5, 0.75, 1.0}) {
    RGraph h = turan_graph(300, 3, 3);
    const double v = 2.0 * tp_norm(h, {2, q}) / std::pow(300.0, 2.0 + q);
    const double want = 2.0 / std::pow(3.0, 1.0 + q);
    rec.expect(std::fabs(v - want) / want < 0.03, "T^3(300,3) density at p=" + fmt(q) + " is " + fmt(v));
    rec.detail("T^3(300,3) p=" + fmt(q) + ": " + fmt(v) + " vs " + fmt(want));
  }
}

inline void counterexample_check(Recorder& rec) {
  double previous = 0.0;
  for (std::size_t n : {30u, 60u}) {
    auto ce = appendix_counterexample(n, 0.1);
    const std::string tag = " at n=" + std::to_string(n);
    rec.expect(!contains_f5_fast(ce.graph), "counterexample contains F5" + tag);
    std::vector<Vertex> keep(n);
    std::iota(keep.begin(), keep.end(), Vertex{0});
    RGraph reduced = induced_subgraph(ce.graph, keep);
    auto cert = strong_partition(reduced, 3);
    rec.expect(cert && certifies(reduced, *cert), "H - v* has no strong 3-partition" + tag);
    rec.expect(!strong_partition(ce.graph, 3), "H admits a strong 3-partition" + tag);
    const double delta = tp_degree_stats(ce.graph, {2, 0.5}).min;
    const double ratio = delta / (2.5 * std::pow(n / 3.0, 1.5));
    rec.expect(ratio >= previous, "min-degree ratio decreased" + tag);
    previous = ratio;
    rec.detail("n=" + std::to_string(n) + ": min (2,1/2)-degree ratio " + fmt(ratio));
  }
}

inline void search_equivalence(Recorder& rec, std::uint64_t seed) {
  for (const char* fam : {"F5", "K4_3", "F5,K43minus"}) {
    const auto family = ForbiddenFamily::parse(fam);
    for (double p : {1.0, 2.0}) {
      for (std::size_t n = 3; n <= 5; ++n) {
        const TpParams params{2, p};
        auto raw = exact_turan(n, 3, family, params, ExactStrategy::exhaustive);
        auto ord = exact_turan(n, 3, family, params, ExactStrategy::canonical_generation);
        const std::string tag = std::string(fam) + " n=" + std::to_string(n) + " p=" + fmt(p);
        rec.expect(raw.value == ord.value, "raw and orderly values differ for " + tag);
        rec.expect(raw.witnesses == ord.witnesses, "raw and orderly witnesses differ for " + tag);
        HillclimbOptions h;
        h.seed = seed;
        h.budget = 5000;
        auto hill = hillclimb_turan(n, 3, family, params, h);
        rec.expect(hill.value <= raw.value * (1 + 1e-12), "hillclimb exceeds the exact value for " + tag);
        rec.expect(hill.value == raw.value, "hillclimb misses the exact value for " + tag);
      }
    }
  }
  const TpParams params{2, 1.0};
  auto star = exact_turan(5, 3, ForbiddenFamily::parse("F5"), params);
  const double partite = optimize_partite_sizes(5, 3, 3, params).norm;
  rec.expect(star.value > partite, "n=5 F5 exact value does not exceed the best 3-partite value");
  rec.detail("n=5 {F5} p=1: exact " + fmt(star.value) + " vs best 3-partite " + fmt(partite) +
             " (small-n extremal graphs differ from the large-n structure)");
}

inline void property_suites(Recorder& rec, std::uint64_t seed) {
  Rng rng(seed);
  const int cases = 1000;
  int checked = 0;
  // Symmetrization over uncovered pairs, p >= 1.
  for (int i = 0; i < cases; ++i) {
    const unsigned r = 2 + unsigned(rng.below(2));
    const std::size_t n = r + 1 + rng.below(8 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform(0.1, 0.5));
    const TpParams params{1 + unsigned(rng.below(r - 1)), rng.uniform(1.0, 4.0)};
    auto pairs = uncovered_pairs(h);
    if (pairs.empty()) continue;
    auto [u, v] = pairs[rng.below(pairs.size())];
    const double lhs = 2 * tp_norm(h, params);
    const double rhs = tp_norm(symmetrize(h, u, v), params) + tp_norm(symmetrize(h, v, u), params);
    rec.expect(lhs <= rhs + 8 * ulp(rhs), "symmetrization decreased the norm sum, case " + std::to_string(i));
    ++checked;
  }
  rec.detail("symmetrization: " + std::to_string(checked) + " cases with an uncovered pair");
  // Degrees only grow when edges are added, p >= 1.
  for (int i = 0; i < cases; ++i) {
    const unsigned r = 2 + unsigned(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform(0.2, 0.8));
    std::vector<Subset> kept;
    for (auto& e : h.edge_list())
      if (rng.uniform() < 0.6) kept.push_back(e);
    RGraph sub(r, n, kept);
    const TpParams params{1 + unsigned(rng.below(r - 1)), rng.uniform(1.0, 4.0)};
    auto big = tp_degrees(h, params), small = tp_degrees(sub, params);
    for (Vertex v = 0; v < n; ++v)
      rec.expect(big[v] >= small[v] - 8 * ulp(small[v]), "local monotonicity fails, case " + std::to_string(i));
  }
  // Jensen bound for p in (0,1).
  for (int i = 0; i < cases; ++i) {
    const unsigned r = 2 + unsigned(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform(0.1, 0.9));
    const unsigned t = 1 + unsigned(rng.below(r - 1));
    const double p = rng.uniform(0.01, 0.99);
    const double lhs = tp_norm(h, {t, p});
    const double rhs = std::pow(double(binomial(r, t) * h.edge_count()), p) *
                       std::pow(double(shadow(h, r - t).size()), 1.0 - p);
    rec.expect(lhs <= rhs * (1 + 1e-12), "Jensen bound fails, case " + std::to_string(i));
  }
  // Hoelder interpolation of the Lagrange polynomial in p.
  for (int i = 0; i < cases; ++i) {
    const unsigned r = 2 + unsigned(rng.below(3));
    const std::size_t n = r + rng.below(9 - r);
    RGraph g = random_graph(rng, n, r, rng.uniform(0.2, 0.9));
    const unsigned t = 1 + unsigned(rng.below(r - 1));
    double ps[3] = {rng.uniform(0.0, 5.0), rng.uniform(0.0, 5.0), rng.uniform(0.0, 5.0)};
    std::sort(ps, ps + 3);
    if (!(ps[0] < ps[1] && ps[1] < ps[2])) continue;
    auto x = rng.dirichlet_one(n);
    const double mid = eval_lagrange_unnormalized(g, {t, ps[1]}, x);
    const double lo = eval_lagrange_unnormalized(g, {t, ps[0]}, x);
    const double hi = eval_lagrange_unnormalized(g, {t, ps[2]}, x);
    const double a = (ps[2] - ps[1]) / (ps[2] - ps[0]);
    const double bound = std::pow(lo, a) * std::pow(hi, 1.0 - a);
    rec.expect(mid <= bound * (1 + 1e-10) + 1e-300, "Hoelder interpolation fails, case " + std::to_string(i));
  }
  // Blowup norm equals the Lagrange polynomial at the part sizes and sits below lambda N^k.
  for (int i = 0; i < 200; ++i) {
    const unsigned r = 2 + unsigned(rng.below(2));
    const std::size_t n = r + rng.below(6 - r);
    RGraph g = random_graph(rng, n, r, 0.6);
    if (g.empty()) g = complete_graph(n, r);
    const TpParams params{1 + unsigned(rng.below(r - 1)), std::vector<double>{0.5, 1.0, 2.0, 3.0}[rng.below(4)]};
    MaximizeOptions mo;
    mo.seed = seed;
    const double lambda = maximize_lagrangian(g, params, mo).value;
    for (int b = 0; b < 5; ++b) {
      std::vector<long long> sizes(n);
      std::vector<double> weights(n);
      long long total = 0;
      for (std::size_t j = 0; j < n; ++j) {
        sizes[j] = 1 + static_cast<long long>(rng.below(3));
        weights[j] = double(sizes[j]);
        total += sizes[j];
      }
      const double norm = tp_norm(blowup(g, sizes), params);
      const double poly = eval_lagrange_unnormalized(g, params, weights);
      rec.expect(close_rel(norm, poly, 1e-12), "blowup norm differs from the polynomial, case " + std::to_string(i));
      const double scale = std::pow(double(total), params.exponent(r));
      rec.expect(norm <= (lambda + 1e-9) * scale, "blowup norm exceeds lambda N^k, case " + std::to_string(i));
    }
  }
  // Colorability and strong partitions agree.
  for (int i = 0; i < cases; ++i) {
    const std::size_t n = 3 + rng.below(5);
    RGraph h = random_graph(rng, n, 3, rng.uniform(0.1, 0.7));
    const unsigned parts = 3 + unsigned(rng.below(2));
    const bool colorable = is_colorable(h, complete_graph(parts, 3));
    auto cert = strong_partition(h, parts);
    rec.expect(colorable == cert.has_value(), "colorability and partition disagree, case " + std::to_string(i));
    if (cert) rec.expect(certifies(h, *cert), "partition certificate invalid, case " + std::to_string(i));
  }
  // Canonical form is idempotent and relabeling-invariant.
  for (int i = 0; i < cases; ++i) {
    const unsigned r = 2 + unsigned(rng.below(2));
    const std::size_t n = r + rng.below(9 - r);
    RGraph h = random_graph(rng, n, r, rng.uniform(0.1, 0.9));
    RGraph c = canonical_form(h);
    rec.expect(canonical_form(c) == c, "canonical form not idempotent, case " + std::to_string(i));
    rec.expect(canonical_form(relabel(h, random_permutation(rng, n))) == c,
               "canonical form changed under relabeling, case " + std::to_string(i));
  }
  rec.detail("seven property families, " + std::to_string(cases) + " cases each (200 base graphs x 5 blowups)");
}

}  // namespace accept_detail

struct AcceptanceCriterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(accept_detail::Recorder&, std::uint64_t)> body;
};

inline const std::vector<AcceptanceCriterion>& acceptance_criteria() {
  using namespace accept_detail;
  static const std::vector<AcceptanceCriterion> list = {
      {1, "exact identities", 30.0, exact_identities},
      {2, "Lagrangian baselines", 120.0, lagrangian_baselines},
      {3, "gradient correctness", 0.0, gradient_correctness},
      {4, "inequality suite", 60.0, [](Recorder& r, std::uint64_t) { inequality_suite(r); }},
      {5, "pi reproduction", 0.0, pi_reproduction},
      {6, "constructions", 180.0, [](Recorder& r, std::uint64_t) { constructions_check(r); }},
      {7, "counterexample", 120.0, [](Recorder& r, std::uint64_t) { counterexample_check(r); }},
      {8, "search oracle equivalence", 300.0, search_equivalence},
      {9, "property suites", 300.0, property_suites},
  };
  return list;
}

inline CriterionResult run_criterion(const AcceptanceCriterion& c, std::uint64_t seed = 0) {
  CriterionResult out;
  out.number = c.number;
  out.title = c.title;
  out.limit_seconds = c.limit_seconds;
  accept_detail::Recorder rec(out);
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(rec, seed);
  } catch (const std::exception& e) {
    rec.expect(false, std::string("exception: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(run_criterion(c, seed));
  return out;
}

}  // namespace tpturan
