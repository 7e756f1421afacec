#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tpturan/core.hpp"

namespace tpturan {

inline constexpr std::size_t kMaxVertices = 4096;

using Subset = std::vector<Vertex>;

// r-uniform hypergraph with an immutable, canonically ordered edge set.
class RGraph {
 public:
  RGraph() : RGraph(2, 0) {}

  RGraph(unsigned r, std::size_t n) : r_(r), n_(n) { check_shape(); }

  RGraph(unsigned r, std::size_t n, const std::vector<Subset>& edges) : r_(r), n_(n) {
    check_shape();
    flat_.reserve(edges.size() * r);
    for (const auto& e : edges) {
      if (e.size() != r)
        throw ParameterError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                             std::to_string(r));
      flat_.insert(flat_.end(), e.begin(), e.end());
    }
    canonicalize();
  }

  // Edges given as consecutive runs of r vertices.
  static RGraph from_flat(unsigned r, std::size_t n, std::vector<Vertex> flat) {
    RGraph g(r, n);
    if (flat.size() % r != 0) throw ParameterError("flat edge buffer is not a multiple of r");
    g.flat_ = std::move(flat);
    g.canonicalize();
    return g;
  }

  unsigned uniformity() const { return r_; }
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, r_};
  }
  const std::vector<Vertex>& flat() const { return flat_; }

  std::vector<Subset> edge_list() const {
    std::vector<Subset> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edge_count(); ++i) {
      auto e = edge(i);
      out.emplace_back(e.begin(), e.end());
    }
    return out;
  }

  // `e` must be sorted.
  bool has_edge(std::span<const Vertex> e) const {
    if (e.size() != r_) return false;
    std::size_t lo = 0, hi = edge_count();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto m = edge(mid);
      if (std::lexicographical_compare(m.begin(), m.end(), e.begin(), e.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == edge_count()) return false;
    auto m = edge(lo);
    return std::equal(m.begin(), m.end(), e.begin());
  }

  bool operator==(const RGraph& o) const {
    return r_ == o.r_ && n_ == o.n_ && flat_ == o.flat_;
  }

 private:
  void check_shape() const {
    if (r_ < 2) throw ParameterError("uniformity must be at least 2");
    if (n_ > kMaxVertices) throw SizeError("vertex count exceeds " + std::to_string(kMaxVertices));
  }

  void canonicalize() {
    const std::size_t m = flat_.size() / r_;
    for (std::size_t i = 0; i < m; ++i) {
      auto* b = flat_.data() + i * r_;
      std::sort(b, b + r_);
      for (unsigned j = 0; j < r_; ++j) {
        if (b[j] >= n_) throw ParameterError("vertex " + std::to_string(b[j]) + " out of range");
        if (j > 0 && b[j] == b[j - 1]) throw ParameterError("edge repeats a vertex");
      }
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(flat_.begin() + a * r_, flat_.begin() + (a + 1) * r_,
                                          flat_.begin() + b * r_, flat_.begin() + (b + 1) * r_);
    };
    if (!std::is_sorted(order.begin(), order.end(), less)) {
      std::sort(order.begin(), order.end(), less);
      std::vector<Vertex> sorted;
      sorted.reserve(flat_.size());
      for (auto i : order) sorted.insert(sorted.end(), flat_.begin() + i * r_, flat_.begin() + (i + 1) * r_);
      flat_ = std::move(sorted);
    }
    for (std::size_t i = 1; i < m; ++i) {
      if (std::equal(flat_.begin() + (i - 1) * r_, flat_.begin() + i * r_, flat_.begin() + i * r_))
        throw ParameterError("duplicate edge");
    }
  }

  unsigned r_;
  std::size_t n_;
  std::vector<Vertex> flat_;
};

struct TpParams {
  unsigned t = 1;
  double p = 1.0;

  void validate(unsigned r) const {
    if (t < 1 || t >= r)
      throw ParameterError("t must satisfy 1 <= t < r (t=" + std::to_string(t) +
                           ", r=" + std::to_string(r) + ")");
    if (!(p >= 0.0) || !std::isfinite(p)) throw ParameterError("p must be a finite real >= 0");
  }
  // Homogeneity degree t + p(r - t).
  double exponent(unsigned r) const { return t + p * (r - t); }
};

// Packs sorted vertex subsets into 64-bit keys.
class SubsetCodec {
 public:
  explicit SubsetCodec(std::size_t n)
      : bits_(std::max<unsigned>(1, static_cast<unsigned>(std::bit_width(n > 0 ? n - 1 : 0)))) {}
  unsigned capacity() const { return 64 / bits_; }
  void require(unsigned size) const {
    if (size > capacity())
      throw SizeError("subset of size " + std::to_string(size) + " cannot be packed for this vertex count");
  }
  std::uint64_t pack(std::span<const Vertex> s) const {
    std::uint64_t key = 0;
    for (auto v : s) key = (key << bits_) | v;
    return key;
  }
  Subset unpack(std::uint64_t key, unsigned size) const {
    Subset s(size);
    const std::uint64_t mask = (std::uint64_t(1) << bits_) - 1;
    for (unsigned i = size; i-- > 0;) {
      s[i] = static_cast<Vertex>(key & mask);
      key >>= bits_;
    }
    return s;
  }

 private:
  unsigned bits_;
};

// Calls f(subset) for every k-subset of the sorted tuple `set`, in lexicographic order.
template <typename F>
void for_each_subset(std::span<const Vertex> set, unsigned k, F&& f) {
  const unsigned m = static_cast<unsigned>(set.size());
  if (k > m) return;
  std::vector<unsigned> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  Subset buf(k);
  while (true) {
    for (unsigned i = 0; i < k; ++i) buf[i] = set[idx[i]];
    f(std::span<const Vertex>(buf));
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Sorted union of a sorted set and one vertex not in it.
inline Subset with_vertex(std::span<const Vertex> s, Vertex v) {
  Subset out;
  out.reserve(s.size() + 1);
  auto it = std::lower_bound(s.begin(), s.end(), v);
  out.insert(out.end(), s.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, s.end());
  return out;
}

inline Subset without_vertex(std::span<const Vertex> s, Vertex v) {
  Subset out;
  out.reserve(s.size());
  for (auto x : s)
    if (x != v) out.push_back(x);
  return out;
}

inline bool contains_vertex(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline void check_vertex(const RGraph& h, Vertex v) {
  if (v >= h.vertex_count()) throw ParameterError("vertex " + std::to_string(v) + " out of range");
}

inline Subset normalize_subset(const RGraph& h, Subset s) {
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_vertex(h, s[i]);
    if (i > 0 && s[i] == s[i - 1]) throw ParameterError("subset repeats a vertex");
  }
  return s;
}

// Degree of every t-subset in the shadow, keyed by packed subset.
using DegreeTable = std::unordered_map<std::uint64_t, std::uint32_t>;

inline DegreeTable degree_table(const RGraph& h, unsigned t) {
  SubsetCodec codec(h.vertex_count());
  codec.require(t);
  DegreeTable table;
  table.reserve(h.edge_count() * binomial(h.uniformity(), t));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for_each_subset(h.edge(i), t, [&](std::span<const Vertex> s) { ++table[codec.pack(s)]; });
  }
  return table;
}

// (r - i)-subsets contained in some edge, sorted.
inline std::vector<Subset> shadow(const RGraph& h, unsigned i) {
  const unsigned r = h.uniformity();
  if (i < 1 || i > r - 1) throw ParameterError("shadow index must lie in [1, r-1]");
  const unsigned size = r - i;
  SubsetCodec codec(h.vertex_count());
  codec.require(size);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Subset> out;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for_each_subset(h.edge(e), size, [&](std::span<const Vertex> s) {
      if (seen.insert(codec.pack(s)).second) out.emplace_back(s.begin(), s.end());
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// L_H(T): the (r - |T|)-sets completing T to an edge, sorted.
inline std::vector<Subset> link(const RGraph& h, Subset t_set) {
  t_set = normalize_subset(h, std::move(t_set));
  if (t_set.size() >= h.uniformity()) throw ParameterError("|T| must be smaller than r");
  std::vector<Subset> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    if (std::includes(e.begin(), e.end(), t_set.begin(), t_set.end())) {
      Subset rest;
      std::set_difference(e.begin(), e.end(), t_set.begin(), t_set.end(), std::back_inserter(rest));
      out.push_back(std::move(rest));
    }
  }
  return out;
}

inline std::size_t degree(const RGraph& h, Subset t_set) {
  t_set = normalize_subset(h, std::move(t_set));
  if (t_set.size() >= h.uniformity()) throw ParameterError("|T| must be smaller than r");
  std::size_t d = 0;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    if (std::includes(e.begin(), e.end(), t_set.begin(), t_set.end())) ++d;
  }
  return d;
}

inline std::vector<std::size_t> vertex_degrees(const RGraph& h) {
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  for (auto v : h.flat()) ++deg[v];
  return deg;
}

// Edge indices incident to each vertex.
inline std::vector<std::vector<std::uint32_t>> incidence(const RGraph& h) {
  std::vector<std::vector<std::uint32_t>> inc(h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (auto v : h.edge(i)) inc[v].push_back(static_cast<std::uint32_t>(i));
  return inc;
}

// Sum over a degree table of d^p, with exact integer paths for p in {0, 1}.
inline double norm_from_table(const DegreeTable& table, double p) {
  if (p == 0.0) return static_cast<double>(table.size());
  if (p == 1.0) {
    std::uint64_t total = 0;
    for (const auto& [key, d] : table) total += d;
    return static_cast<double>(total);
  }
  std::map<std::uint32_t, std::uint64_t> histogram;
  for (const auto& [key, d] : table) ++histogram[d];
  CompensatedSum sum;
  for (const auto& [d, count] : histogram) sum += static_cast<double>(count) * std::pow(double(d), p);
  return sum.value();
}

inline double tp_norm(const RGraph& h, const TpParams& params) {
  params.validate(h.uniformity());
  return norm_from_table(degree_table(h, params.t), params.p);
}

// Same vertex set, edges through v dropped.
inline RGraph remove_vertex(const RGraph& h, Vertex v) {
  check_vertex(h, v);
  std::vector<Vertex> flat;
  flat.reserve(h.flat().size());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    if (!contains_vertex(e, v)) flat.insert(flat.end(), e.begin(), e.end());
  }
  return RGraph::from_flat(h.uniformity(), h.vertex_count(), std::move(flat));
}

// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in the given order.
inline RGraph induced_subgraph(const RGraph& h, const std::vector<Vertex>& keep) {
  std::vector<std::int64_t> index(h.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(h, keep[i]);
    if (index[keep[i]] >= 0) throw ParameterError("duplicate vertex in induced set");
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) { return index[v] >= 0; });
    if (inside)
      for (auto v : e) flat.push_back(static_cast<Vertex>(index[v]));
  }
  return RGraph::from_flat(h.uniformity(), keep.size(), std::move(flat));
}

// Vertex v is renamed to perm[v].
inline RGraph relabel(const RGraph& h, const std::vector<Vertex>& perm) {
  if (perm.size() != h.vertex_count()) throw ParameterError("permutation has wrong length");
  std::vector<Vertex> flat;
  flat.reserve(h.flat().size());
  for (auto v : h.flat()) flat.push_back(perm[v]);
  return RGraph::from_flat(h.uniformity(), h.vertex_count(), std::move(flat));
}

enum class DegreeMethod { definitional, closed_form };

namespace detail {

inline double degree_power(std::uint32_t d, double p) {
  if (d == 0) return 0.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return d;
  return std::pow(double(d), p);
}

// The two sums in the closed-form vertex degree, plus the auxiliary sum
// of d(T+v) d(T)^(p-1) used by the double-counting identities.
struct DegreeParts {
  double through_v = 0.0;   // sum over t-sets containing v of d^p
  double beside_v = 0.0;    // sum over t-sets T next to v of d(T)^p - (d(T) - d(T+v))^p
  double weighted = 0.0;    // sum over the same T of d(T+v) d(T)^(p-1)
};

inline DegreeParts degree_parts(const RGraph& h, const DegreeTable& table, const SubsetCodec& codec,
                                const std::vector<std::uint32_t>& incident, Vertex v, const TpParams& params) {
  const unsigned t = params.t;
  const double p = params.p;
  std::unordered_set<std::uint64_t> through;
  std::unordered_map<std::uint64_t, std::uint32_t> beside;  // T -> d(T + v)
  for (auto ei : incident) {
    auto e = h.edge(ei);
    for_each_subset(e, t, [&](std::span<const Vertex> s) {
      if (contains_vertex(s, v))
        through.insert(codec.pack(s));
      else
        ++beside[codec.pack(s)];
    });
  }
  CompensatedSum a, b, c;
  for (auto key : through) a += detail::degree_power(table.at(key), p);
  for (const auto& [key, with_v] : beside) {
    const std::uint32_t d = table.at(key);
    b += degree_power(d, p) - degree_power(d - with_v, p);
    c += with_v * (p == 1.0 ? 1.0 : std::pow(double(d), p - 1.0));
  }
  return {a.value(), b.value(), c.value()};
}

}  // namespace detail

// d_{H,t,p}(v) = ||H|| - ||H - v||.
inline double tp_degree(const RGraph& h, Vertex v, const TpParams& params,
                        DegreeMethod method = DegreeMethod::closed_form) {
  params.validate(h.uniformity());
  check_vertex(h, v);
  const SubsetCodec codec(h.vertex_count());
  codec.require(params.t);
  const DegreeTable table = degree_table(h, params.t);
  if (method == DegreeMethod::definitional) {
    const DegreeTable reduced = degree_table(remove_vertex(h, v), params.t);
    CompensatedSum sum;
    for (const auto& [key, d] : table) {
      auto it = reduced.find(key);
      const std::uint32_t d_reduced = it == reduced.end() ? 0 : it->second;
      if (d_reduced != d) sum += detail::degree_power(d, params.p) - detail::degree_power(d_reduced, params.p);
    }
    return sum.value();
  }
  std::vector<std::uint32_t> incident;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (contains_vertex(h.edge(i), v)) incident.push_back(static_cast<std::uint32_t>(i));
  auto parts = detail::degree_parts(h, table, codec, incident, v, params);
  CompensatedSum sum;
  sum += parts.through_v;
  sum += parts.beside_v;
  return sum.value();
}

// All vertex degrees in one pass over a shared degree table.
inline std::vector<double> tp_degrees(const RGraph& h, const TpParams& params) {
  params.validate(h.uniformity());
  const SubsetCodec codec(h.vertex_count());
  codec.require(params.t);
  const DegreeTable table = degree_table(h, params.t);
  const auto inc = incidence(h);
  std::vector<double> out(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    auto parts = detail::degree_parts(h, table, codec, inc[v], v, params);
    CompensatedSum sum;
    sum += parts.through_v;
    sum += parts.beside_v;
    out[v] = sum.value();
  }
  return out;
}

// Totals over all vertices of the two double-counting sums; they should
// equal t ||H|| and (r - t) ||H|| respectively.
struct DoubleCountingSums {
  double through_v = 0.0;
  double weighted = 0.0;
};

inline DoubleCountingSums double_counting_sums(const RGraph& h, const TpParams& params) {
  params.validate(h.uniformity());
  const SubsetCodec codec(h.vertex_count());
  codec.require(params.t);
  const DegreeTable table = degree_table(h, params.t);
  const auto inc = incidence(h);
  CompensatedSum a, b;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    auto parts = detail::degree_parts(h, table, codec, inc[v], v, params);
    a += parts.through_v;
    b += parts.weighted;
  }
  return {a.value(), b.value()};
}

struct DegreeStats {
  double min = 0.0;
  double max = 0.0;
  double average = 0.0;
};

inline DegreeStats tp_degree_stats(const RGraph& h, const TpParams& params) {
  if (h.vertex_count() == 0) throw DomainError("degree statistics need at least one vertex");
  auto degrees = tp_degrees(h, params);
  DegreeStats s;
  s.min = *std::min_element(degrees.begin(), degrees.end());
  s.max = *std::max_element(degrees.begin(), degrees.end());
  CompensatedSum sum;
  for (double d : degrees) sum += d;
  s.average = sum.value() / static_cast<double>(degrees.size());
  return s;
}

// covered[u * n + v] is true iff u, v share an edge.
inline std::vector<bool> covered_pairs(const RGraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<bool> covered(n * n, false);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (auto a : e)
      for (auto b : e)
        if (a != b) covered[a * n + b] = true;
  }
  return covered;
}

// Links of single vertices as sorted packed (r-1)-sets.
inline std::vector<std::vector<std::uint64_t>> vertex_links(const RGraph& h) {
  const SubsetCodec codec(h.vertex_count());
  codec.require(h.uniformity() - 1);
  std::vector<std::vector<std::uint64_t>> links(h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (auto v : e) {
      Subset rest = without_vertex(e, v);
      links[v].push_back(codec.pack(rest));
    }
  }
  for (auto& l : links) std::sort(l.begin(), l.end());
  return links;
}

using VertexPair = std::pair<Vertex, Vertex>;

inline std::vector<VertexPair> uncovered_pairs(const RGraph& h) {
  const std::size_t n = h.vertex_count();
  auto covered = covered_pairs(h);
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!covered[u * n + v]) out.emplace_back(u, v);
  return out;
}

inline std::vector<VertexPair> equivalent_pairs(const RGraph& h) {
  const std::size_t n = h.vertex_count();
  auto links = vertex_links(h);
  auto covered = covered_pairs(h);
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!covered[u * n + v] && links[u] == links[v]) out.emplace_back(u, v);
  return out;
}

// H_{u -> v}: u takes over a copy of v's link.
inline RGraph symmetrize(const RGraph& h, Vertex u, Vertex v) {
  check_vertex(h, u);
  check_vertex(h, v);
  if (u == v) throw PreconditionError("symmetrization needs two distinct vertices");
  std::vector<Vertex> flat;
  std::vector<Vertex> added;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    const bool has_u = contains_vertex(e, u);
    const bool has_v = contains_vertex(e, v);
    if (has_u && has_v) throw PreconditionError("pair is covered by an edge");
    if (!has_u) flat.insert(flat.end(), e.begin(), e.end());
    if (has_v) {
      for (auto x : e) added.push_back(x == v ? u : x);
    }
  }
  flat.insert(flat.end(), added.begin(), added.end());
  return RGraph::from_flat(h.uniformity(), h.vertex_count(), std::move(flat));
}

inline bool is_symmetrized(const RGraph& h) {
  const std::size_t n = h.vertex_count();
  auto links = vertex_links(h);
  auto covered = covered_pairs(h);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!covered[u * n + v] && links[u] != links[v]) return false;
  return true;
}

// Every pair of vertices of `vertices` lies in a common edge of H.
inline bool is_two_covered(const RGraph& h, const std::vector<Vertex>& vertices) {
  const std::size_t n = h.vertex_count();
  auto covered = covered_pairs(h);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!covered[vertices[i] * n + vertices[j]]) return false;
  return true;
}

inline RGraph complete_graph(std::size_t n, unsigned r) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0u);
  std::vector<Vertex> flat;
  if (n >= r) for_each_subset(all, r, [&](std::span<const Vertex> s) { flat.insert(flat.end(), s.begin(), s.end()); });
  return RGraph::from_flat(r, n, std::move(flat));
}

}  // namespace tpturan
