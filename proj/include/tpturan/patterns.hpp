#pragma once

#include <bit>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "tpturan/hypergraph.hpp"

namespace tpturan {

inline RGraph f5_pattern() { return RGraph(3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}); }

// K_4^3 with the edge {1,2,3} removed.
inline RGraph k43_minus_pattern() { return RGraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }

inline RGraph clique_pattern(std::size_t l, unsigned r) {
  if (l < r) throw ParameterError("clique K_l^r needs l >= r");
  return complete_graph(l, r);
}

// Expansion of a 2-graph: each edge gets r - 2 fresh vertices, numbered after
// the original vertices in edge order.
inline RGraph expansion_pattern(const RGraph& f, unsigned r) {
  if (f.uniformity() != 2) throw ParameterError("expansion needs a 2-graph");
  if (r < 2) throw ParameterError("expansion uniformity must be at least 2");
  const std::size_t extra = r - 2;
  const std::size_t n = f.vertex_count() + extra * f.edge_count();
  std::vector<Vertex> flat;
  Vertex next = static_cast<Vertex>(f.vertex_count());
  for (std::size_t i = 0; i < f.edge_count(); ++i) {
    auto e = f.edge(i);
    flat.insert(flat.end(), e.begin(), e.end());
    for (std::size_t j = 0; j < extra; ++j) flat.push_back(next++);
  }
  return RGraph::from_flat(r, n, std::move(flat));
}

// Names: F5, K43minus, K<l>_<r> (complete), HK<l>_<r> (expansion of K_l).
inline RGraph builtin_pattern(const std::string& name) {
  if (name == "F5") return f5_pattern();
  if (name == "K43minus") return k43_minus_pattern();
  std::smatch m;
  static const std::regex clique(R"(K(\d+)_(\d+))");
  static const std::regex expansion(R"(HK(\d+)_(\d+))");
  if (std::regex_match(name, m, clique))
    return clique_pattern(std::stoul(m[1]), static_cast<unsigned>(std::stoul(m[2])));
  if (std::regex_match(name, m, expansion))
    return expansion_pattern(complete_graph(std::stoul(m[1]), 2), static_cast<unsigned>(std::stoul(m[2])));
  throw ParameterError("unknown pattern '" + name + "'");
}

namespace detail {

// Pairwise adjacency of a host graph, as adjacency lists and bit rows.
struct HostIndex {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::vector<Vertex>> neighbours;
  std::vector<std::uint64_t> bits;
  std::vector<std::size_t> deg;

  explicit HostIndex(const RGraph& h) : n(h.vertex_count()), words((n + 63) / 64) {
    neighbours.resize(n);
    bits.assign(n * words, 0);
    deg = vertex_degrees(h);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      auto e = h.edge(i);
      for (auto a : e)
        for (auto b : e)
          if (a != b && !adjacent(a, b)) {
            bits[a * words + b / 64] |= std::uint64_t(1) << (b % 64);
            neighbours[a].push_back(b);
          }
    }
  }
  bool adjacent(Vertex a, Vertex b) const { return (bits[a * words + b / 64] >> (b % 64)) & 1; }
};

// Injective embedding search of a small pattern into a host.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const RGraph& host, const RGraph& pattern, Deadline& deadline)
      : host_(host), pattern_(pattern), index_(host), deadline_(deadline) {
    if (host.uniformity() != pattern.uniformity()) throw ParameterError("pattern and host have different uniformity");
    pattern_deg_ = vertex_degrees(pattern);
    const std::size_t k = pattern.vertex_count();
    pattern_adj_.assign(k * k, false);
    for (std::size_t i = 0; i < pattern.edge_count(); ++i) {
      auto e = pattern.edge(i);
      for (auto a : e)
        for (auto b : e)
          if (a != b) pattern_adj_[a * k + b] = true;
    }
  }

  // Searches for an embedding; `pinned` fixes the images of some pattern vertices.
  std::optional<std::vector<Vertex>> run(const std::vector<std::pair<Vertex, Vertex>>& pinned = {}) {
    const std::size_t k = pattern_.vertex_count();
    if (k > host_.vertex_count()) return std::nullopt;
    map_.assign(k, kUnset);
    used_.assign(host_.vertex_count(), false);
    for (auto [pv, hv] : pinned) {
      if (map_[pv] != kUnset || used_[hv]) return std::nullopt;
      map_[pv] = hv;
      used_[hv] = true;
    }
    build_order(pinned);
    // Pinned vertices are validated as a prefix of the order.
    for (std::size_t pos = 0; pos < pinned.size(); ++pos)
      if (!consistent(pos)) return std::nullopt;
    if (extend(pinned.size())) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnset = ~Vertex(0);

  void build_order(const std::vector<std::pair<Vertex, Vertex>>& pinned) {
    const std::size_t k = pattern_.vertex_count();
    order_.clear();
    std::vector<bool> placed(k, false);
    for (auto [pv, hv] : pinned) {
      order_.push_back(pv);
      placed[pv] = true;
    }
    while (order_.size() < k) {
      std::size_t best = k;
      std::pair<std::size_t, std::size_t> best_key{0, 0};
      for (std::size_t u = 0; u < k; ++u) {
        if (placed[u]) continue;
        std::size_t links = 0;
        for (auto w : order_) links += pattern_adj_[u * k + w];
        std::pair<std::size_t, std::size_t> key{links, pattern_deg_[u]};
        if (best == k || key > best_key) {
          best = u;
          best_key = key;
        }
      }
      order_.push_back(static_cast<Vertex>(best));
      placed[best] = true;
    }
    // Pattern edges that become fully mapped at each position.
    std::vector<std::size_t> position(k);
    for (std::size_t i = 0; i < k; ++i) position[order_[i]] = i;
    closing_.assign(k, {});
    for (std::size_t i = 0; i < pattern_.edge_count(); ++i) {
      auto e = pattern_.edge(i);
      std::size_t last = 0;
      for (auto v : e) last = std::max(last, position[v]);
      closing_[last].push_back(i);
    }
    earlier_neighbours_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (pattern_adj_[order_[i] * k + order_[j]]) earlier_neighbours_[i].push_back(order_[j]);
  }

  bool consistent(std::size_t pos) const {
    const Vertex u = order_[pos];
    const Vertex hu = map_[u];
    if (index_.deg[hu] < pattern_deg_[u]) return false;
    for (auto w : earlier_neighbours_[pos])
      if (!index_.adjacent(hu, map_[w])) return false;
    Subset image(pattern_.uniformity());
    for (auto ei : closing_[pos]) {
      auto e = pattern_.edge(ei);
      for (std::size_t j = 0; j < e.size(); ++j) image[j] = map_[e[j]];
      std::sort(image.begin(), image.end());
      if (!host_.has_edge(image)) return false;
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    deadline_.tick("pattern containment");
    const Vertex u = order_[pos];
    auto try_vertex = [&](Vertex hv) {
      if (used_[hv]) return false;
      map_[u] = hv;
      used_[hv] = true;
      bool ok = consistent(pos) && extend(pos + 1);
      if (!ok) {
        used_[hv] = false;
        map_[u] = kUnset;
      }
      return ok;
    };
    if (!earlier_neighbours_[pos].empty()) {
      const Vertex anchor = map_[earlier_neighbours_[pos].front()];
      for (auto hv : index_.neighbours[anchor])
        if (try_vertex(hv)) return true;
    } else {
      for (Vertex hv = 0; hv < host_.vertex_count(); ++hv)
        if (try_vertex(hv)) return true;
    }
    return false;
  }

  const RGraph& host_;
  const RGraph& pattern_;
  HostIndex index_;
  Deadline& deadline_;
  std::vector<std::size_t> pattern_deg_;
  std::vector<bool> pattern_adj_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<std::vector<Vertex>> earlier_neighbours_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace detail

// Witness maps pattern vertex i to host vertex witness[i].
inline std::optional<std::vector<Vertex>> find_embedding(const RGraph& host, const RGraph& pattern,
                                                         double timeout_secs = kDefaultTimeoutSecs) {
  Deadline deadline(timeout_secs);
  detail::EmbeddingSearch search(host, pattern, deadline);
  return search.run();
}

inline bool contains_pattern(const RGraph& host, const RGraph& pattern, double timeout_secs = kDefaultTimeoutSecs) {
  return find_embedding(host, pattern, timeout_secs).has_value();
}

// Only embeddings that use the given host edge.
inline std::optional<std::vector<Vertex>> find_embedding_through_edge(const RGraph& host, const RGraph& pattern,
                                                                      std::span<const Vertex> edge,
                                                                      double timeout_secs = kDefaultTimeoutSecs) {
  Deadline deadline(timeout_secs);
  detail::EmbeddingSearch search(host, pattern, deadline);
  std::vector<Vertex> image(edge.begin(), edge.end());
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < pattern.edge_count(); ++i) {
    auto f = pattern.edge(i);
    std::vector<Vertex> perm = image;
    do {
      std::vector<std::pair<Vertex, Vertex>> pinned;
      for (std::size_t j = 0; j < f.size(); ++j) pinned.emplace_back(f[j], perm[j]);
      if (auto w = search.run(pinned)) return w;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

inline bool contains_f5_fast(const RGraph& h) {
  if (h.uniformity() != 3) throw ParameterError("the F5 detector needs a 3-graph");
  const std::size_t n = h.vertex_count();
  std::unordered_map<std::uint64_t, std::vector<Vertex>> pair_links;
  pair_links.reserve(h.edge_count() * 3);
  auto key = [n](Vertex a, Vertex b) { return static_cast<std::uint64_t>(a) * n + b; };
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    pair_links[key(e[0], e[1])].push_back(e[2]);
    pair_links[key(e[0], e[2])].push_back(e[1]);
    pair_links[key(e[1], e[2])].push_back(e[0]);
  }
  auto codegree = [&](Vertex a, Vertex b) -> std::size_t {
    if (a > b) std::swap(a, b);
    auto it = pair_links.find(key(a, b));
    return it == pair_links.end() ? 0 : it->second.size();
  };
  auto triple = [&](Vertex a, Vertex b, Vertex c) {
    Vertex t[3] = {a, b, c};
    std::sort(t, t + 3);
    return h.has_edge(t);
  };
  for (const auto& [ab, links] : pair_links) {
    if (links.size() < 2) continue;
    const Vertex a = static_cast<Vertex>(ab / n);
    const Vertex b = static_cast<Vertex>(ab % n);
    for (std::size_t i = 0; i < links.size(); ++i)
      for (std::size_t j = i + 1; j < links.size(); ++j) {
        const Vertex c = links[i], d = links[j];
        const std::size_t blocked = triple(c, d, a) + triple(c, d, b);
        if (codegree(c, d) > blocked) return true;
      }
  }
  return false;
}

// Homomorphism H -> G: witness[v] is the image of v.
inline std::optional<std::vector<Vertex>> find_homomorphism(const RGraph& h, const RGraph& g,
                                                            double timeout_secs = kDefaultTimeoutSecs) {
  if (h.uniformity() != g.uniformity()) throw ParameterError("graphs have different uniformity");
  const std::size_t n = h.vertex_count();
  const std::size_t m = g.vertex_count();
  if (n == 0) return std::vector<Vertex>{};
  if (m == 0) return std::nullopt;
  Deadline deadline(timeout_secs);
  const std::size_t words = (m + 63) / 64;
  detail::HostIndex target(g);
  const auto inc = incidence(h);
  using Domain = std::vector<std::uint64_t>;
  auto popcount = [&](const Domain& d, std::size_t v) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w) c += std::popcount(d[v * words + w]);
    return c;
  };
  Domain full(n * words, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < m; ++x) full[v * words + x / 64] |= std::uint64_t(1) << (x % 64);
  std::vector<Vertex> image(n, ~Vertex(0));
  const auto hdeg = vertex_degrees(h);

  std::function<bool(Domain&, std::size_t)> solve = [&](Domain& dom, std::size_t assigned) -> bool {
    if (assigned == n) return true;
    deadline.tick("colorability");
    std::size_t pick = n, best = ~std::size_t(0);
    for (std::size_t v = 0; v < n; ++v) {
      if (image[v] != ~Vertex(0)) continue;
      std::size_t c = popcount(dom, v);
      if (c == 0) return false;
      if (c < best || (c == best && hdeg[v] > hdeg[pick])) {
        best = c;
        pick = v;
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      if (!((dom[pick * words + x / 64] >> (x % 64)) & 1)) continue;
      Domain next = dom;
      image[pick] = static_cast<Vertex>(x);
      bool ok = true;
      for (auto ei : inc[pick]) {
        auto e = h.edge(ei);
        std::vector<Vertex> open;
        Subset mapped;
        for (auto w : e) {
          if (image[w] == ~Vertex(0))
            open.push_back(w);
          else
            mapped.push_back(image[w]);
        }
        std::sort(mapped.begin(), mapped.end());
        if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
          ok = false;
          break;
        }
        if (open.empty()) {
          if (!g.has_edge(mapped)) {
            ok = false;
            break;
          }
        } else if (open.size() == 1) {
          const Vertex w = open[0];
          for (std::size_t y = 0; y < m; ++y) {
            auto& word = next[w * words + y / 64];
            if (!((word >> (y % 64)) & 1)) continue;
            if (contains_vertex(mapped, static_cast<Vertex>(y)) ||
                !g.has_edge(with_vertex(mapped, static_cast<Vertex>(y))))
              word &= ~(std::uint64_t(1) << (y % 64));
          }
        } else {
          for (auto w : open)
            for (std::size_t k = 0; k < words; ++k) next[w * words + k] &= target.bits[x * words + k];
        }
      }
      if (ok && solve(next, assigned + 1)) return true;
      image[pick] = ~Vertex(0);
    }
    return false;
  };
  if (solve(full, 0)) return image;
  return std::nullopt;
}

inline bool is_colorable(const RGraph& h, const RGraph& g, double timeout_secs = kDefaultTimeoutSecs) {
  return find_homomorphism(h, g, timeout_secs).has_value();
}

struct PartitionCertificate {
  unsigned parts = 0;
  std::vector<std::uint32_t> part;  // part[v] in [0, parts)
};

// Every edge meets each part at most once.
inline bool certifies(const RGraph& h, const PartitionCertificate& cert) {
  if (cert.part.size() != h.vertex_count()) return false;
  for (auto c : cert.part)
    if (c >= cert.parts) return false;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        if (cert.part[e[a]] == cert.part[e[b]]) return false;
  }
  return true;
}

inline std::optional<PartitionCertificate> strong_partition(const RGraph& h, unsigned parts,
                                                            double timeout_secs = kDefaultTimeoutSecs) {
  const unsigned r = h.uniformity();
  if (parts < r) throw ParameterError("number of parts must be at least r");
  if (parts > 64) throw ParameterError("at most 64 parts supported");
  const std::size_t n = h.vertex_count();
  Deadline deadline(timeout_secs);
  const auto inc = incidence(h);
  const std::uint64_t all = parts == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << parts) - 1;

  struct State {
    std::vector<std::uint64_t> domain;
    std::vector<int> color;
    unsigned used = 0;  // colours 0..used-1 have appeared
  };

  // Assigns and propagates; false on conflict.
  auto assign = [&](State& s, Vertex v, unsigned c) {
    std::vector<std::pair<Vertex, unsigned>> queue{{v, c}};
    while (!queue.empty()) {
      auto [x, col] = queue.back();
      queue.pop_back();
      if (s.color[x] >= 0) {
        if (static_cast<unsigned>(s.color[x]) != col) return false;
        continue;
      }
      if (!((s.domain[x] >> col) & 1)) return false;
      s.color[x] = static_cast<int>(col);
      s.domain[x] = std::uint64_t(1) << col;
      s.used = std::max(s.used, col + 1);
      for (auto ei : inc[x])
        for (auto y : h.edge(ei)) {
          if (y == x) continue;
          if (s.color[y] == static_cast<int>(col)) return false;
          if (s.color[y] >= 0) continue;
          s.domain[y] &= ~(std::uint64_t(1) << col);
          if (s.domain[y] == 0) return false;
          if (std::popcount(s.domain[y]) == 1) queue.emplace_back(y, std::countr_zero(s.domain[y]));
        }
    }
    return true;
  };

  std::function<bool(State&)> solve = [&](State& s) -> bool {
    deadline.tick("strong partition");
    Vertex pick = static_cast<Vertex>(n);
    int best = 65;
    for (Vertex v = 0; v < n; ++v) {
      if (s.color[v] >= 0 || inc[v].empty()) continue;
      int c = std::popcount(s.domain[v]);
      if (c < best) {
        best = c;
        pick = v;
      }
    }
    if (pick == n) return true;
    for (unsigned c = 0; c < parts; ++c) {
      if (!((s.domain[pick] >> c) & 1)) continue;
      if (c > s.used) break;  // unused colours are interchangeable
      State next = s;
      if (assign(next, pick, c) && solve(next)) {
        s = std::move(next);
        return true;
      }
    }
    return false;
  };

  State s{std::vector<std::uint64_t>(n, all), std::vector<int>(n, -1), 0};
  if (h.edge_count() > 0) {
    auto first = h.edge(0);
    for (unsigned j = 0; j < r; ++j)
      if (!assign(s, first[j], j)) return std::nullopt;
  }
  if (!solve(s)) return std::nullopt;
  PartitionCertificate cert;
  cert.parts = parts;
  cert.part.resize(n);
  for (std::size_t v = 0; v < n; ++v) cert.part[v] = s.color[v] < 0 ? 0u : static_cast<std::uint32_t>(s.color[v]);
  return cert;
}

enum class DetectorHint { generic, f5, k43minus };

struct ForbiddenFamily {
  std::vector<RGraph> patterns;
  std::vector<DetectorHint> hints;

  ForbiddenFamily() = default;
  explicit ForbiddenFamily(std::vector<RGraph> ps, std::vector<DetectorHint> hs = {})
      : patterns(std::move(ps)), hints(std::move(hs)) {
    if (hints.empty()) hints.assign(patterns.size(), DetectorHint::generic);
    if (hints.size() != patterns.size()) throw ParameterError("one detector hint per pattern");
    for (const auto& p : patterns)
      if (p.uniformity() != patterns.front().uniformity())
        throw ParameterError("family patterns must share one uniformity");
  }

  // Comma-separated builtin names, e.g. "F5,K43minus". "none" is the empty family.
  static ForbiddenFamily parse(const std::string& spec) {
    ForbiddenFamily fam;
    if (spec == "none" || spec.empty()) return fam;
    std::stringstream ss(spec);
    std::string name;
    std::vector<RGraph> ps;
    std::vector<DetectorHint> hs;
    while (std::getline(ss, name, ',')) {
      ps.push_back(builtin_pattern(name));
      hs.push_back(name == "F5" ? DetectorHint::f5 : name == "K43minus" ? DetectorHint::k43minus : DetectorHint::generic);
    }
    return ForbiddenFamily(std::move(ps), std::move(hs));
  }

  bool empty() const { return patterns.empty(); }
  unsigned uniformity() const { return patterns.empty() ? 0 : patterns.front().uniformity(); }

  bool contains_any(const RGraph& h, double timeout_secs = kDefaultTimeoutSecs) const {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (hints[i] == DetectorHint::f5 && h.uniformity() == 3) {
        if (contains_f5_fast(h)) return true;
      } else if (contains_pattern(h, patterns[i], timeout_secs)) {
        return true;
      }
    }
    return false;
  }

  bool contains_any_through_edge(const RGraph& h, std::span<const Vertex> edge,
                                 double timeout_secs = kDefaultTimeoutSecs) const {
    for (const auto& p : patterns)
      if (find_embedding_through_edge(h, p, edge, timeout_secs)) return true;
    return false;
  }
};

}  // namespace tpturan
