#pragma once

#include <string>
#include <vector>

#include "ecpoly/graph.hpp"

namespace ecpoly {

struct CanonicalForm {
  /// graph6 encoding of the canonically relabelled graph.
  std::string key;
  /// labelling[v] is the canonical label of input vertex v.
  std::vector<Vertex> labelling;
  Graph graph;
};

/// Exact canonical labelling: colour refinement, individualisation of the
/// first smallest non-trivial cell, and pruning by automorphisms discovered
/// at the leaves. The key is the lexicographically least adjacency string over
/// all leaves of the search tree, so equal keys mean isomorphic graphs.
CanonicalForm canonical_form(const Graph& g);

std::string canonicalize(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace ecpoly
