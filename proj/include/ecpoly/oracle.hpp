#pragma once

#include <cstddef>
#include <cstdint>

#include "ecpoly/graph.hpp"
#include "ecpoly/polynomial.hpp"

namespace ecpoly {

struct OracleConfig {
  /// Largest edge count the enumerators accept (2^m subsets are visited).
  std::size_t max_edges = 28;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t worker_count = 0;
};

inline constexpr std::size_t kOracleEdgeLimit = 62;

/// E_c(G, x) by visiting every edge subset. Zero for disconnected graphs and
/// graphs with an isolated vertex, the constant 1 for the null graph.
/// Throws SizeCapExceeded when m > cfg.max_edges.
IntPolynomial connected_edge_cover_polynomial(const Graph& g, const OracleConfig& cfg = {});

/// E(G, x): covering edge sets without the connectivity requirement.
IntPolynomial edge_cover_polynomial(const Graph& g, const OracleConfig& cfg = {});

/// Kirchhoff count via fraction-free elimination on a reduced Laplacian.
/// 0 for disconnected graphs. Throws BadParameters for n = 0 and
/// IntegerOverflow if the count does not fit in 64 bits.
std::int64_t spanning_tree_count(const Graph& g);

}  // namespace ecpoly
