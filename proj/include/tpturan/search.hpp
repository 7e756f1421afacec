#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tpturan/constructions.hpp"
#include "tpturan/patterns.hpp"

namespace tpturan {

enum class SearchMethod { exhaustive, canonical_generation, hillclimb, construction, closed_form };

inline std::string to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::exhaustive: return "exhaustive";
    case SearchMethod::canonical_generation: return "canonical_generation";
    case SearchMethod::hillclimb: return "hillclimb";
    case SearchMethod::construction: return "construction";
    case SearchMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

struct SearchResult {
  double value = 0.0;
  std::vector<RGraph> witnesses;  // canonical forms, sorted
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t explored = 0;
  std::string note;
};

inline constexpr std::size_t kMaxCanonicalVertices = 10;

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Subset> all_subsets(std::size_t n, unsigned k) {
  std::vector<Vertex> base(n);
  std::iota(base.begin(), base.end(), Vertex{0});
  std::vector<Subset> out;
  for_each_subset(std::span<const Vertex>(base), k, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

namespace detail {

inline bool values_tie(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)}); }

// Iterated vertex colouring by degree and the colours seen across incident edges.
inline std::vector<std::size_t> refined_classes(const RGraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> colour(n, 0);
  auto inc = incidence(h);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> s = {colour[v], inc[v].size()};
      std::vector<std::vector<std::size_t>> seen;
      for (auto ei : inc[v]) {
        std::vector<std::size_t> others;
        for (auto w : h.edge(ei))
          if (w != v) others.push_back(colour[w]);
        std::sort(others.begin(), others.end());
        seen.push_back(std::move(others));
      }
      std::sort(seen.begin(), seen.end());
      for (auto& o : seen) {
        s.push_back(o.size());
        s.insert(s.end(), o.begin(), o.end());
      }
      sig[v] = {std::move(s), v};
    }
    // Larger signatures first so high-degree vertices take the small labels.
    std::vector<std::vector<std::size_t>> distinct;
    for (auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = std::lower_bound(distinct.begin(), distinct.end(), sig[v].first, std::greater<>()) - distinct.begin();
    const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                        std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable && round > 0) break;
  }
  return colour;
}

}  // namespace detail

// Lexicographically smallest edge list over relabelings that respect the refined vertex classes.
inline RGraph canonical_form(const RGraph& h, double timeout_secs = kDefaultTimeoutSecs) {
  const std::size_t n = h.vertex_count();
  if (n > kMaxCanonicalVertices)
    throw SizeError("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  if (h.empty()) return h;
  const auto colour = detail::refined_classes(h);
  const std::size_t classes = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<Vertex>> members(classes);
  for (Vertex v = 0; v < n; ++v) members[colour[v]].push_back(v);
  std::vector<Vertex> first_label(classes, 0);
  for (std::size_t c = 1; c < classes; ++c) first_label[c] = first_label[c - 1] + Vertex(members[c - 1].size());

  Deadline deadline(timeout_secs);
  std::vector<Vertex> perm(n);
  std::vector<Vertex> best;
  auto evaluate = [&] {
    deadline.tick("canonical_form");
    std::vector<Subset> edges;
    edges.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      Subset e;
      for (auto v : h.edge(i)) e.push_back(perm[v]);
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Vertex> flat;
    for (auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
    if (best.empty() || flat < best) best = std::move(flat);
  };
  // Enumerate the product of per-class orderings.
  std::vector<std::vector<Vertex>> order = members;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == classes) {
      evaluate();
      return;
    }
    auto& m = order[c];
    std::sort(m.begin(), m.end());
    do {
      for (std::size_t i = 0; i < m.size(); ++i) perm[m[i]] = first_label[c] + Vertex(i);
      self(self, c + 1);
    } while (std::next_permutation(m.begin(), m.end()));
  };
  rec(rec, 0);
  return RGraph::from_flat(h.uniformity(), n, std::move(best));
}

inline bool isomorphic(const RGraph& a, const RGraph& b) {
  return a.uniformity() == b.uniformity() && a.vertex_count() == b.vertex_count() &&
         a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

namespace detail {

// The complete r-graph on n <= 7ish vertices with edges indexed 0..m-1 and subsets stored as masks.
struct SmallUniverse {
  std::size_t n = 0;
  unsigned r = 0;
  std::vector<Subset> edges;
  std::vector<std::vector<std::uint32_t>> tsets_of_edge;  // t-subset ranks per edge
  std::size_t tset_count = 0;
  std::vector<double> power_table;  // d^p by degree
  std::vector<std::uint64_t> copies;  // forbidden copies as edge masks
  std::vector<std::vector<std::uint64_t>> copies_with;  // per edge index

  SmallUniverse(std::size_t n_, unsigned r_, const ForbiddenFamily& family, const TpParams& params) : n(n_), r(r_) {
    edges = all_subsets(n, r);
    if (edges.size() > 64) throw SizeError("small universe needs at most 64 candidate edges");
    auto tsets = all_subsets(n, params.t);
    std::map<Subset, std::uint32_t> trank;
    for (std::uint32_t i = 0; i < tsets.size(); ++i) trank[tsets[i]] = i;
    tset_count = tsets.size();
    for (auto& e : edges) {
      std::vector<std::uint32_t> ranks;
      for_each_subset(std::span<const Vertex>(e), params.t,
                      [&](std::span<const Vertex> s) { ranks.push_back(trank.at(Subset(s.begin(), s.end()))); });
      tsets_of_edge.push_back(std::move(ranks));
    }
    const std::size_t max_degree = n >= r ? binomial(n - params.t, r - params.t) : 0;
    for (std::size_t d = 0; d <= max_degree; ++d) power_table.push_back(degree_power(std::uint32_t(d), params.p));
    std::map<Subset, std::size_t> erank;
    for (std::size_t i = 0; i < edges.size(); ++i) erank[edges[i]] = i;
    std::set<std::uint64_t> unique;
    for (const auto& pattern : family.patterns) collect_copies(pattern, erank, unique);
    copies.assign(unique.begin(), unique.end());
    copies_with.assign(edges.size(), {});
    for (auto c : copies)
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (c >> i & 1) copies_with[i].push_back(c);
  }

  void collect_copies(const RGraph& pattern, const std::map<Subset, std::size_t>& erank, std::set<std::uint64_t>& out) {
    const std::size_t k = pattern.vertex_count();
    if (k > n) return;
    std::vector<Vertex> image(k);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == k) {
        std::uint64_t mask = 0;
        for (std::size_t e = 0; e < pattern.edge_count(); ++e) {
          Subset s;
          for (auto v : pattern.edge(e)) s.push_back(image[v]);
          std::sort(s.begin(), s.end());
          mask |= std::uint64_t(1) << erank.at(s);
        }
        out.insert(mask);
        return;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        image[i] = v;
        self(self, i + 1);
        used[v] = false;
      }
    };
    rec(rec, 0);
  }

  // Whether adding edge j to the free set `mask` completes a forbidden copy.
  bool completes_copy(std::uint64_t mask, std::size_t j) const {
    const std::uint64_t with = mask | std::uint64_t(1) << j;
    for (auto c : copies_with[j])
      if ((c & ~with) == 0) return true;
    return false;
  }

  // Norm from a degree histogram so relabelings give bit-identical values.
  double value(std::uint64_t mask) const {
    std::vector<std::uint32_t> degree(tset_count, 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1)
        for (auto t : tsets_of_edge[i]) ++degree[t];
    std::vector<std::uint64_t> histogram(power_table.size(), 0);
    for (auto d : degree)
      if (d > 0) ++histogram[d];
    CompensatedSum s;
    for (std::size_t d = 1; d < histogram.size(); ++d)
      if (histogram[d]) s += double(histogram[d]) * power_table[d];
    return s.value();
  }

  RGraph graph(std::uint64_t mask) const {
    std::vector<Subset> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) es.push_back(edges[i]);
    return RGraph(r, n, es);
  }

  std::uint64_t all_above(std::size_t j) const {
    const std::size_t m = edges.size();
    std::uint64_t full = m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
    return j >= m ? 0 : full & ~((std::uint64_t(1) << j) - 1);
  }
};

// Tracks the best value and every mask that ties it.
struct WitnessPool {
  double best = -1.0;
  std::vector<std::uint64_t> masks;
  void offer(double v, std::uint64_t mask) {
    if (best < 0.0 || (v > best && !values_tie(v, best))) {
      best = v;
      masks = {mask};
    } else if (values_tie(v, best)) {
      masks.push_back(mask);
    }
  }
  bool hopeless(double bound) const { return best >= 0.0 && bound < best && !values_tie(bound, best); }
};

inline std::vector<RGraph> canonical_witnesses(const SmallUniverse& u, const std::vector<std::uint64_t>& masks) {
  std::set<std::vector<Vertex>> seen;
  std::vector<RGraph> out;
  for (auto m : masks) {
    RGraph c = canonical_form(u.graph(m));
    if (seen.insert(c.flat()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const RGraph& a, const RGraph& b) {
    return a.edge_count() != b.edge_count() ? a.edge_count() < b.edge_count() : a.flat() < b.flat();
  });
  return out;
}

// Every permutation of n <= 7 vertices as a map on edge indices.
inline std::vector<std::vector<std::uint8_t>> edge_permutations(const SmallUniverse& u) {
  std::map<Subset, std::uint8_t> erank;
  for (std::size_t i = 0; i < u.edges.size(); ++i) erank[u.edges[i]] = std::uint8_t(i);
  std::vector<Vertex> perm(u.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::vector<std::uint8_t>> out;
  do {
    std::vector<std::uint8_t> map(u.edges.size());
    for (std::size_t i = 0; i < u.edges.size(); ++i) {
      Subset s;
      for (auto v : u.edges[i]) s.push_back(perm[v]);
      std::sort(s.begin(), s.end());
      map[i] = erank.at(s);
    }
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// A sorted edge-index list is canonical when no relabeling gives a lexicographically smaller list.
inline bool is_canonical_code(const std::vector<std::uint8_t>& code, const std::vector<std::vector<std::uint8_t>>& perms) {
  std::vector<std::uint8_t> image(code.size());
  for (const auto& map : perms) {
    for (std::size_t i = 0; i < code.size(); ++i) image[i] = map[code[i]];
    std::sort(image.begin(), image.end());
    if (image < code) return false;
  }
  return true;
}

inline void check_search_inputs(std::size_t n, unsigned r, const ForbiddenFamily& family, const TpParams& params) {
  params.validate(r);
  if (!family.empty() && family.uniformity() != r)
    throw ParameterError("family uniformity " + std::to_string(family.uniformity()) + " does not match r=" +
                         std::to_string(r));
  if (n > kMaxVertices) throw SizeError("too many vertices");
}

}  // namespace detail

inline constexpr std::size_t kMaxRawEdges = 20;
inline constexpr std::size_t kMaxOrderlyVertices = 7;

enum class ExactStrategy { automatic, exhaustive, canonical_generation };

// ex_{t,p}(n, family) with all extremal graphs up to isomorphism.
inline SearchResult exact_turan(std::size_t n, unsigned r, const ForbiddenFamily& family, const TpParams& params,
                                ExactStrategy strategy = ExactStrategy::automatic,
                                double timeout_secs = kDefaultTimeoutSecs) {
  detail::check_search_inputs(n, r, family, params);
  const std::size_t m = n >= r ? binomial(n, r) : 0;
  if (strategy == ExactStrategy::automatic)
    strategy = m <= kMaxRawEdges ? ExactStrategy::exhaustive : ExactStrategy::canonical_generation;
  if (strategy == ExactStrategy::exhaustive && m > kMaxRawEdges)
    throw SizeError("raw exhaustion needs C(n,r) <= 20 (got " + std::to_string(m) + "); use hillclimb_turan");
  if (strategy == ExactStrategy::canonical_generation && n > kMaxOrderlyVertices)
    throw SizeError("orderly generation needs n <= 7 (got " + std::to_string(n) + "); use hillclimb_turan");

  detail::SmallUniverse u(n, r, family, params);
  detail::WitnessPool pool;
  Deadline deadline(timeout_secs);
  SearchResult res;
  const bool orderly = strategy == ExactStrategy::canonical_generation;
  res.method = orderly ? SearchMethod::canonical_generation : SearchMethod::exhaustive;
  std::vector<std::vector<std::uint8_t>> perms;
  if (orderly) perms = detail::edge_permutations(u);
  std::vector<std::uint8_t> code;

  // Children add an edge above the current maximum; the norm is monotone, so a subtree whose
  // union cannot reach the best value is skipped.
  auto visit = [&](auto&& self, std::uint64_t mask, std::size_t next) -> void {
    deadline.tick("exact_turan");
    ++res.explored;
    pool.offer(u.value(mask), mask);
    if (pool.hopeless(u.value(mask | u.all_above(next)))) return;
    for (std::size_t j = next; j < u.edges.size(); ++j) {
      if (u.completes_copy(mask, j)) continue;
      if (orderly) {
        code.push_back(std::uint8_t(j));
        const bool keep = detail::is_canonical_code(code, perms);
        if (keep) self(self, mask | std::uint64_t(1) << j, j + 1);
        code.pop_back();
      } else {
        self(self, mask | std::uint64_t(1) << j, j + 1);
      }
    }
  };
  visit(visit, 0, 0);
  res.value = pool.best;
  res.witnesses = detail::canonical_witnesses(u, pool.masks);
  if (r == 3 && n >= 3 && family.contains_any(f5_pattern(), timeout_secs)) {
    const auto best = optimize_partite_sizes(n, 3, 3, params);
    const double partite = best.norm;
    if (res.value > partite + 1e-9 * std::max(1.0, partite) &&
        !family.contains_any(complete_partite(best.sizes, 3), timeout_secs)) {
      std::ostringstream note;
      note.precision(12);
      note << "exceeds the best complete 3-partite value " << partite
           << "; expected at small n, where the partite structure is not yet extremal";
      res.note = note.str();
    }
  }
  return res;
}

struct HillclimbOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;  // freeness checks
  double timeout_secs = kDefaultTimeoutSecs;
  int tabu_size = 50;
};

namespace detail {

class ClimbState {
 public:
  ClimbState(std::size_t n, unsigned r, const ForbiddenFamily& family, const TpParams& params)
      : n_(n), r_(r), family_(family), params_(params), universe_(all_subsets(n, r)) {
    auto tsets = all_subsets(n, params.t);
    std::map<Subset, std::uint32_t> trank;
    for (std::uint32_t i = 0; i < tsets.size(); ++i) trank[tsets[i]] = i;
    degree_.assign(tsets.size(), 0);
    for (auto& e : universe_) {
      std::vector<std::uint32_t> ranks;
      for_each_subset(std::span<const Vertex>(e), params.t,
                      [&](std::span<const Vertex> s) { ranks.push_back(trank.at(Subset(s.begin(), s.end()))); });
      tsets_.push_back(std::move(ranks));
      index_[e] = tsets_.size() - 1;
    }
    present_.assign(universe_.size(), false);
  }

  std::size_t universe_size() const { return universe_.size(); }
  bool present(std::size_t i) const { return present_[i]; }
  double value() const { return value_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<std::size_t>& edges() const { return edges_; }

  void clear() {
    for (auto i : std::vector<std::size_t>(edges_.begin(), edges_.end())) remove(i);
    value_ = 0.0;
  }

  void add(std::size_t i) {
    for (auto t : tsets_[i]) {
      value_ += degree_power(degree_[t] + 1, params_.p) - degree_power(degree_[t], params_.p);
      ++degree_[t];
    }
    present_[i] = true;
    edges_.insert(i);
  }
  void remove(std::size_t i) {
    for (auto t : tsets_[i]) {
      value_ += degree_power(degree_[t] - 1, params_.p) - degree_power(degree_[t], params_.p);
      --degree_[t];
    }
    present_[i] = false;
    edges_.erase(i);
  }

  RGraph graph() const {
    std::vector<Subset> es;
    for (auto i : edges_) es.push_back(universe_[i]);
    return RGraph(r_, n_, es);
  }

  // Whether edge i can join the current graph without creating a forbidden copy.
  bool legal(std::size_t i, double timeout_secs) const {
    if (family_.empty()) return true;
    std::vector<Subset> es;
    for (auto j : edges_) es.push_back(universe_[j]);
    es.push_back(universe_[i]);
    RGraph g(r_, n_, es);
    return !family_.contains_any_through_edge(g, universe_[i], timeout_secs);
  }

  void load(const RGraph& g) {
    clear();
    for (auto& e : g.edge_list()) add(index_.at(e));
  }

  std::uint64_t fingerprint() const {
    if (n_ <= kMaxOrderlyVertices) {
      std::uint64_t h = 1469598103934665603ull;
      for (auto v : canonical_form(graph()).flat()) h = (h ^ v) * 1099511628211ull;
      return h;
    }
    std::uint64_t h = 1469598103934665603ull;
    for (auto i : edges_) h = (h ^ i) * 1099511628211ull;
    return h;
  }

 private:
  std::size_t n_;
  unsigned r_;
  const ForbiddenFamily& family_;
  TpParams params_;
  std::vector<Subset> universe_;
  std::vector<std::vector<std::uint32_t>> tsets_;
  std::map<Subset, std::size_t> index_;
  std::vector<std::uint32_t> degree_;
  std::vector<bool> present_;
  std::set<std::size_t> edges_;
  double value_ = 0.0;
};

}  // namespace detail

// Local search lower bound for ex_{t,p}(n, family); the witness is re-checked for freeness.
inline SearchResult hillclimb_turan(std::size_t n, unsigned r, const ForbiddenFamily& family, const TpParams& params,
                                    const HillclimbOptions& opts = {}) {
  detail::check_search_inputs(n, r, family, params);
  SearchResult res;
  res.method = SearchMethod::hillclimb;
  if (n < r) {
    res.witnesses = {RGraph(r, n)};
    return res;
  }
  detail::ClimbState state(n, r, family, params);
  Rng rng(opts.seed);
  Deadline deadline(opts.timeout_secs);
  std::uint64_t checks = 0;
  bool out_of_time = false;
  auto spend = [&] {
    ++checks;
    try {
      deadline.tick("hillclimb");
    } catch (const UndecidedError&) {
      out_of_time = true;
    }
    return checks < opts.budget && !out_of_time;
  };

  double best_value = -1.0;
  RGraph best_graph(r, n);
  auto record = [&] {
    if (state.value() > best_value + 1e-12 * std::max(1.0, best_value)) {
      best_value = state.value();
      best_graph = state.graph();
    }
  };
  // Adds legal edges in random order until none fits.
  auto saturate = [&] {
    std::vector<std::size_t> order(state.universe_size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    for (auto i : order) {
      if (state.present(i)) continue;
      if (!spend()) return;
      if (state.legal(i, opts.timeout_secs)) state.add(i);
    }
  };

  std::vector<RGraph> seeds;
  auto offer_seed = [&](const RGraph& g) {
    if (g.vertex_count() == n && !family.contains_any(g, opts.timeout_secs)) seeds.push_back(g);
  };
  if (n >= r) {
    offer_seed(turan_graph(n, r, r));
    for (std::size_t parts = r; parts <= std::min<std::size_t>(n, r + 2); ++parts)
      offer_seed(complete_partite(optimize_partite_sizes(n, parts, r, params, opts.seed).sizes, r));
  }
  if (r == 3)
    for (std::size_t k : {7u, 9u, 13u, 15u})
      if (k <= n) offer_seed(balanced_blowup(sts(k), n));
  // Score every seed before climbing so a small budget cannot skip them.
  for (const auto& g : seeds) {
    state.clear();
    state.load(g);
    record();
  }

  std::deque<std::uint64_t> tabu;
  auto tabu_hit = [&](std::uint64_t f) { return std::find(tabu.begin(), tabu.end(), f) != tabu.end(); };
  auto remember = [&](std::uint64_t f) {
    tabu.push_back(f);
    if (tabu.size() > std::size_t(opts.tabu_size)) tabu.pop_front();
  };

  std::size_t restart = 0;
  while (checks < opts.budget && !out_of_time) {
    state.clear();
    if (restart < seeds.size()) state.load(seeds[restart]);
    ++restart;
    saturate();
    record();
    // Swap moves: drop an edge, refill, keep the result if it improves or walks a fresh plateau.
    int stale = 0;
    while (checks < opts.budget && !out_of_time && stale < 4 * int(state.universe_size()) + 20) {
      if (state.edge_count() == 0) break;
      const double before = state.value();
      const auto old_edges = state.edges();
      const std::size_t kicks = stale > 2 * int(state.universe_size()) ? 2 : 1;
      for (std::size_t k = 0; k < kicks && state.edge_count() > 0; ++k) {
        auto it = state.edges().begin();
        std::advance(it, rng.below(state.edge_count()));
        state.remove(*it);
      }
      saturate();
      const double after = state.value();
      const double tol = 1e-12 * std::max(1.0, std::fabs(before));
      bool accept = after > before + tol;
      if (!accept && std::fabs(after - before) <= tol) {
        const auto f = state.fingerprint();
        accept = !tabu_hit(f);
        if (accept) remember(f);
      }
      if (accept) {
        if (after > before + tol) stale = 0;
        else ++stale;
        record();
      } else {
        ++stale;
        state.clear();
        for (auto i : old_edges) state.add(i);
      }
    }
    record();
  }
  res.explored = checks;
  if (family.contains_any(best_graph, opts.timeout_secs))
    throw Error("internal: hillclimb witness contains a forbidden pattern");
  res.value = tp_norm(best_graph, params);
  res.witnesses = {n <= kMaxCanonicalVertices ? canonical_form(best_graph) : best_graph};
  if (out_of_time) res.note = "timeout reached; best found so far";
  return res;
}

struct DensityPoint {
  std::size_t n = 0;
  double value = 0.0;       // lower bound or exact ex_{t,p}
  double normalized = 0.0;  // t! value / n^{t+p(r-t)}
  SearchMethod method = SearchMethod::exhaustive;
  bool exact = false;
};

struct DensityOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 20000;
  double timeout_secs = kDefaultTimeoutSecs;
};

inline double complete_graph_norm(std::size_t n, unsigned r, const TpParams& params) {
  if (n < r) return 0.0;
  return double(binomial(n, params.t)) * std::pow(double(binomial(n - params.t, r - params.t)), params.p);
}

namespace detail {

// Best of the 3-partite and STS-blowup constructions, each checked F5-free.
inline double f5_construction_value(std::size_t n, const TpParams& params, std::uint64_t seed) {
  double best = 0.0;
  if (n >= 3) best = optimize_partite_sizes(n, 3, 3, params, seed).norm;
  for (std::size_t k = 7; k <= std::min<std::size_t>(n, 31); k += 2) {
    if (k % 6 != 1 && k % 6 != 3) continue;
    RGraph g = balanced_blowup(sts(k), n);
    if (contains_f5_fast(g)) continue;
    best = std::max(best, tp_norm(g, params));
  }
  return best;
}

inline bool f5_only(const ForbiddenFamily& family) {
  return family.patterns.size() == 1 && family.hints[0] == DetectorHint::f5;
}

}  // namespace detail

// Normalized extremal-norm estimates per n; exact where the instance is small enough.
inline std::vector<DensityPoint> density_sequence(const ForbiddenFamily& family, unsigned r, const TpParams& params,
                                                  const std::vector<std::size_t>& ns, const DensityOptions& opts = {}) {
  detail::check_search_inputs(0, r, family, params);
  std::vector<DensityPoint> out;
  for (auto n : ns) {
    DensityPoint pt;
    pt.n = n;
    if (family.empty()) {
      pt.value = complete_graph_norm(n, r, params);
      pt.method = SearchMethod::closed_form;
      pt.exact = true;
    } else if ((n >= r ? binomial(n, r) : 0) <= kMaxRawEdges || n <= 6) {
      auto res = exact_turan(n, r, family, params, ExactStrategy::automatic, opts.timeout_secs);
      pt.value = res.value;
      pt.method = res.method;
      pt.exact = true;
    } else if (r == 3 && detail::f5_only(family)) {
      pt.value = detail::f5_construction_value(n, params, opts.seed);
      pt.method = SearchMethod::construction;
    } else {
      HillclimbOptions h;
      h.seed = opts.seed;
      h.budget = opts.budget;
      h.timeout_secs = opts.timeout_secs;
      pt.value = hillclimb_turan(n, r, family, params, h).value;
      pt.method = SearchMethod::hillclimb;
    }
    pt.normalized = n == 0 ? 0.0 : factorial(params.t) * pt.value / std::pow(double(n), params.exponent(r));
    out.push_back(pt);
  }
  return out;
}

}  // namespace tpturan
