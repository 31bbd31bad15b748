#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ecpoly {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

/// Largest supported order. Vertex neighbourhoods are stored as 64-bit masks.
inline constexpr std::size_t kMaxVertices = 62;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable labelled simple graph.
///
/// Edges are kept as (u, v) pairs with u < v, sorted lexicographically; the
/// position of an edge in that list is its index everywhere in the library
/// (edge subsets, bitmasks, reports).
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return vertex_count_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Edge indices incident with v, ascending.
  std::span<const EdgeIndex> incident(Vertex v) const { return incidence_.at(v); }
  std::uint64_t neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Index of edge {u, v}, or size() when absent.
  EdgeIndex find_edge(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool has_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::vector<std::uint64_t> adjacency_;
};

/// Validates and normalises an edge list. Pairs may be given in any order and
/// with either endpoint first. Throws LoopEdge, DuplicateEdge,
/// VertexOutOfRange, or UnsupportedSize (n > kMaxVertices).
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

/// G \ e: same vertex set, edge e removed.
Graph delete_edge(const Graph& g, EdgeIndex e);

/// G \ v: v and its incident edges removed; labels above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);

/// Applies a relabelling: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Exactly one connected component. The empty graph and K_1 are connected.
bool is_connected(const Graph& g);

/// Subset of the edges of one particular graph.
class EdgeSubset {
 public:
  explicit EdgeSubset(const Graph& g);
  static EdgeSubset from_mask(const Graph& g, std::uint64_t mask);
  static EdgeSubset all(const Graph& g);
  static EdgeSubset of(const Graph& g, std::initializer_list<EdgeIndex> edges);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(EdgeIndex e) const;
  void insert(EdgeIndex e);
  void erase(EdgeIndex e);
  std::size_t count() const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// True iff every vertex of g is incident with an edge of s and the spanning
/// subgraph (V(g), s) is connected.
bool covered_and_connected(const Graph& g, const EdgeSubset& s);

}  // namespace ecpoly
