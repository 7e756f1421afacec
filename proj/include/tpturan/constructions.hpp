#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "tpturan/hypergraph.hpp"

namespace tpturan {

// True iff every pair of vertices lies in exactly one edge.
inline bool is_steiner_triple_system(const RGraph& h) {
  if (h.uniformity() != 3) return false;
  const std::size_t n = h.vertex_count();
  std::vector<std::uint8_t> count(n * n, 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (++count[e[a] * n + e[b]] > 1) return false;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (count[u * n + v] != 1) return false;
  return true;
}

// Bose construction for k = 3 (mod 6), Skolem construction for k = 1 (mod 6).
inline RGraph sts(std::size_t k) {
  if (k < 3 || (k % 6 != 1 && k % 6 != 3)) throw DomainError("a Steiner triple system needs k = 1 or 3 (mod 6), k >= 3");
  std::vector<Subset> edges;
  if (k % 6 == 3) {
    const std::size_t q = k / 3;  // odd order of the idempotent commutative quasigroup on Z_q
    const std::size_t half = (q + 1) / 2;
    auto op = [&](std::size_t x, std::size_t y) { return ((x + y) * half) % q; };
    auto pt = [&](std::size_t x, std::size_t i) { return static_cast<Vertex>(x + q * (i % 3)); };
    for (std::size_t x = 0; x < q; ++x) edges.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < q; ++x)
        for (std::size_t y = x + 1; y < q; ++y) edges.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
  } else {
    const std::size_t half = (k - 1) / 6;
    const std::size_t q = 2 * half;  // half-idempotent commutative quasigroup on Z_q
    auto op = [&](std::size_t x, std::size_t y) {
      std::size_t s = (x + y) % q;
      return s % 2 == 0 ? s / 2 : half + s / 2;
    };
    auto pt = [&](std::size_t x, std::size_t i) { return static_cast<Vertex>(x + q * (i % 3)); };
    const Vertex infinity = static_cast<Vertex>(k - 1);
    for (std::size_t x = 0; x < half; ++x) edges.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (std::size_t x = 0; x < half; ++x)
      for (std::size_t i = 0; i < 3; ++i) edges.push_back({infinity, pt(half + x, i), pt(x, i + 1)});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < q; ++x)
        for (std::size_t y = x + 1; y < q; ++y) edges.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
  }
  RGraph g(3, k, edges);
  if (!is_steiner_triple_system(g)) throw Error("internal: generated triple system failed pair coverage");
  return g;
}

// Vertex i of the base becomes a block of sizes[i] consecutive new vertices.
inline RGraph blowup(const RGraph& base, const std::vector<long long>& sizes) {
  if (sizes.size() != base.vertex_count()) throw ParameterError("one part size per base vertex");
  std::vector<std::size_t> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) throw ParameterError("part sizes must be non-negative");
    offset[i + 1] = offset[i] + static_cast<std::size_t>(sizes[i]);
  }
  const unsigned r = base.uniformity();
  std::vector<Vertex> flat;
  std::vector<std::size_t> pick(r);
  for (std::size_t ei = 0; ei < base.edge_count(); ++ei) {
    auto e = base.edge(ei);
    bool empty_part = false;
    for (auto v : e) empty_part |= sizes[v] == 0;
    if (empty_part) continue;
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      for (unsigned j = 0; j < r; ++j) flat.push_back(static_cast<Vertex>(offset[e[j]] + pick[j]));
      int j = static_cast<int>(r) - 1;
      while (j >= 0 && pick[j] + 1 == static_cast<std::size_t>(sizes[e[j]])) pick[j--] = 0;
      if (j < 0) break;
      ++pick[j];
    }
  }
  return RGraph::from_flat(r, offset.back(), std::move(flat));
}

inline RGraph balanced_blowup(const RGraph& base, std::size_t n) {
  const std::size_t m = base.vertex_count();
  if (m == 0) throw ParameterError("base graph has no vertices");
  std::vector<long long> sizes(m, static_cast<long long>(n / m));
  for (std::size_t i = 0; i < n % m; ++i) ++sizes[i];
  return blowup(base, sizes);
}

inline RGraph complete_partite(const std::vector<long long>& sizes, unsigned r) {
  if (sizes.size() < r) throw ParameterError("complete partite graph needs at least r parts");
  return blowup(complete_graph(sizes.size(), r), sizes);
}

inline std::vector<long long> balanced_sizes(std::size_t n, std::size_t parts) {
  std::vector<long long> sizes(parts, static_cast<long long>(n / parts));
  for (std::size_t i = 0; i < n % parts; ++i) ++sizes[i];
  return sizes;
}

inline RGraph turan_graph(std::size_t n, std::size_t parts, unsigned r) {
  if (parts < r) throw ParameterError("Turan graph needs at least r parts");
  return complete_partite(balanced_sizes(n, parts), r);
}

// ||K^r[sizes]||_{t,p} from part sizes alone: a rainbow t-set over parts P has
// degree e_{r-t}(sizes outside P), and there are prod_{i in P} sizes_i of them.
inline double complete_partite_norm(const std::vector<long long>& sizes, unsigned r, const TpParams& params) {
  params.validate(r);
  const std::size_t l = sizes.size();
  if (l < r) throw ParameterError("complete partite graph needs at least r parts");
  const unsigned t = params.t;
  CompensatedSum total;
  std::vector<Vertex> parts(l);
  std::iota(parts.begin(), parts.end(), 0u);
  for_each_subset(parts, t, [&](std::span<const Vertex> chosen) {
    double count = 1;
    std::vector<double> rest;
    std::size_t c = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (c < chosen.size() && chosen[c] == i) {
        count *= static_cast<double>(sizes[i]);
        ++c;
      } else {
        rest.push_back(static_cast<double>(sizes[i]));
      }
    }
    // elementary symmetric polynomial e_{r-t}(rest)
    std::vector<double> e(r - t + 1, 0.0);
    e[0] = 1.0;
    for (double s : rest)
      for (std::size_t j = r - t; j >= 1; --j) e[j] += e[j - 1] * s;
    const double d = e[r - t];
    if (count == 0 || d == 0) return;
    total += count * (params.p == 0 ? 1.0 : std::pow(d, params.p));
  });
  return total.value();
}

struct PartiteOptimum {
  std::vector<long long> sizes;  // non-increasing
  double norm = 0.0;
  bool exhaustive = false;
};

namespace detail {

inline bool better_partition(double value, const std::vector<long long>& sizes, double best_value,
                             const std::vector<long long>& best_sizes) {
  const double tol = 1e-12 * std::max(1.0, std::fabs(best_value));
  if (value > best_value + tol) return true;
  if (value < best_value - tol) return false;
  return best_sizes.empty() || sizes < best_sizes;
}

}  // namespace detail

// Maximizes the norm of K^r[sizes] over compositions of n into `parts` positive parts.
inline PartiteOptimum optimize_partite_sizes(std::size_t n, std::size_t parts, unsigned r, const TpParams& params,
                                             std::uint64_t seed = 0) {
  params.validate(r);
  if (parts < r) throw ParameterError("need at least r parts");
  if (n < parts) throw ParameterError("need n >= number of parts");
  PartiteOptimum best;
  best.norm = -1.0;
  auto consider = [&](std::vector<long long> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    double v = complete_partite_norm(sizes, r, params);
    if (detail::better_partition(v, sizes, best.norm, best.sizes)) {
      best.norm = v;
      best.sizes = sizes;
    }
  };
  // By symmetry only non-increasing vectors are enumerated; the count bound uses compositions.
  const double compositions = std::exp(std::lgamma(double(n)) - std::lgamma(double(parts)) - std::lgamma(double(n - parts + 1)));
  if (compositions <= 1e6) {
    best.exhaustive = true;
    std::vector<long long> cur;
    std::function<void(long long, long long, std::size_t)> rec = [&](long long remaining, long long cap, std::size_t left) {
      if (left == 0) {
        if (remaining == 0) consider(cur);
        return;
      }
      const long long lo = (remaining + static_cast<long long>(left) - 1) / static_cast<long long>(left);
      for (long long s = std::min(cap, remaining - static_cast<long long>(left) + 1); s >= lo; --s) {
        cur.push_back(s);
        rec(remaining - s, s, left - 1);
        cur.pop_back();
      }
    };
    rec(static_cast<long long>(n), static_cast<long long>(n), parts);
    return best;
  }
  // Unit transfers between parts until no transfer improves.
  auto climb = [&](std::vector<long long> sizes) {
    double value = complete_partite_norm(sizes, r, params);
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < parts && !improved; ++i)
        for (std::size_t j = 0; j < parts && !improved; ++j) {
          if (i == j || sizes[i] <= 1) continue;
          --sizes[i];
          ++sizes[j];
          double v = complete_partite_norm(sizes, r, params);
          if (v > value * (1 + 1e-15)) {
            value = v;
            improved = true;
          } else {
            ++sizes[i];
            --sizes[j];
          }
        }
    }
    consider(sizes);
  };
  climb(balanced_sizes(n, parts));
  Rng rng(seed);
  for (int restart = 0; restart < 20; ++restart) {
    std::vector<long long> sizes(parts, 1);
    for (std::size_t k = parts; k < n; ++k) ++sizes[rng.below(parts)];
    climb(sizes);
  }
  return best;
}

// The counterexample built from a perturbed balanced complete 3-partite graph
// plus one extra vertex; see the README for the exact recipe.
struct CounterexampleGraph {
  RGraph graph;
  Vertex extra_vertex = 0;     // v*
  std::size_t marked_size = 0; // |A_1| = |A_2|
  Vertex hub1 = 0;             // u1
  Vertex hub2 = 0;             // u2
};

inline CounterexampleGraph appendix_counterexample(std::size_t n, double eps1) {
  if (n == 0 || n % 3 != 0) throw PreconditionError("n must be a positive multiple of 3");
  if (!(eps1 > 0)) throw PreconditionError("eps1 must be positive");
  const std::size_t part = n / 3;
  const double scaled = eps1 * static_cast<double>(n);
  const auto a = static_cast<std::size_t>(std::floor(scaled + 1e-9));
  if (a < 1) throw PreconditionError("floor(eps1 * n) must be at least 1");
  if (!(scaled < static_cast<double>(part) - 1.0)) throw PreconditionError("eps1 * n must be below n/3 - 1");
  const Vertex v1 = 0, v2 = static_cast<Vertex>(part), v3 = static_cast<Vertex>(2 * part);
  const Vertex u1 = static_cast<Vertex>(v2 + a);
  const Vertex u2 = v3;
  const Vertex star = static_cast<Vertex>(n);
  auto in_a1 = [&](Vertex x) { return x < v1 + a; };
  auto in_a2 = [&](Vertex x) { return x >= v2 && x < v2 + a; };
  std::vector<Vertex> flat;
  for (Vertex x = v1; x < v2; ++x)
    for (Vertex y = v2; y < v3; ++y)
      for (Vertex z = v3; z < star; ++z) {
        const bool removed = (in_a1(x) && y == u1 && z == u2) || (in_a1(x) && in_a2(y));
        if (!removed) flat.insert(flat.end(), {x, y, z});
      }
  for (Vertex x = v1; x < v1 + a; ++x)
    for (Vertex y = v2; y < v2 + a; ++y) flat.insert(flat.end(), {x, y, star});
  flat.insert(flat.end(), {u1, u2, star});
  return {RGraph::from_flat(3, n + 1, std::move(flat)), star, a, u1, u2};
}

}  // namespace tpturan
