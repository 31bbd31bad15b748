#include "ecpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "ecpoly/error.hpp"

namespace ecpoly {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::UnsupportedSize,
                "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
  Graph g;
  g.vertex_count_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "edge " + pair_text(a, b) + " with n=" + std::to_string(n));
    }
    if (a == b) throw Error(ErrorKind::LoopEdge, "edge " + pair_text(a, b));
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge " + pair_text(dup->u, dup->v));
  }
  g.incidence_.assign(n, {});
  g.adjacency_.assign(n, 0);
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.incidence_[u].push_back(e);
    g.incidence_[v].push_back(e);
    g.adjacency_[u] |= std::uint64_t{1} << v;
    g.adjacency_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return u < vertex_count_ && v < vertex_count_ && ((adjacency_[u] >> v) & 1U) != 0;
}

EdgeIndex Graph::find_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it != edges_.end() && *it == Edge{u, v}) return static_cast<EdgeIndex>(it - edges_.begin());
  return edges_.size();
}

std::size_t Graph::min_degree() const {
  std::size_t best = vertex_count_ == 0 ? 0 : incidence_[0].size();
  for (const auto& inc : incidence_) best = std::min(best, inc.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(incidence_.begin(), incidence_.end(), [](const auto& inc) { return inc.empty(); });
}

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

Graph delete_edge(const Graph& g, EdgeIndex e) {
  if (e >= g.size()) {
    throw Error(ErrorKind::EdgeOutOfRange, "edge index " + std::to_string(e) + " with m=" + std::to_string(g.size()));
  }
  auto pairs = edge_pairs(g);
  pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(e));
  return build_graph(g.order(), pairs);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(g.order()));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    pairs.emplace_back(shift(e.u), shift(e.v));
  }
  return build_graph(g.order() - 1, pairs);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw Error(ErrorKind::BadParameters, "permutation length does not match order");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return build_graph(g.order(), pairs);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbours(static_cast<Vertex>(std::countr_zero(f)));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(n);
}

EdgeSubset::EdgeSubset(const Graph& g) : universe_(g.size()), words_((g.size() + 63) / 64, 0) {}

EdgeSubset EdgeSubset::from_mask(const Graph& g, std::uint64_t mask) {
  EdgeSubset s(g);
  if (g.size() < 64 && (mask >> g.size()) != 0) {
    throw Error(ErrorKind::EdgeOutOfRange, "mask has bits beyond m=" + std::to_string(g.size()));
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

EdgeSubset EdgeSubset::all(const Graph& g) {
  EdgeSubset s(g);
  for (EdgeIndex e = 0; e < g.size(); ++e) s.insert(e);
  return s;
}

EdgeSubset EdgeSubset::of(const Graph& g, std::initializer_list<EdgeIndex> edges) {
  EdgeSubset s(g);
  for (EdgeIndex e : edges) s.insert(e);
  return s;
}

bool EdgeSubset::contains(EdgeIndex e) const {
  return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
}

void EdgeSubset::insert(EdgeIndex e) {
  if (e >= universe_) throw Error(ErrorKind::EdgeOutOfRange, "edge index " + std::to_string(e));
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSubset::erase(EdgeIndex e) {
  if (e >= universe_) throw Error(ErrorKind::EdgeOutOfRange, "edge index " + std::to_string(e));
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

std::size_t EdgeSubset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool covered_and_connected(const Graph& g, const EdgeSubset& s) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&parent](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> covered(n, false);
  std::size_t components = n;
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    if (!s.contains(e)) continue;
    auto [u, v] = g.edge(e);
    covered[u] = covered[v] = true;
    Vertex ru = find(u);
    Vertex rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1 && std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace ecpoly
