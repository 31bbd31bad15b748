#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecpoly/graph.hpp"
#include "ecpoly/oracle.hpp"
#include "ecpoly/polynomial.hpp"

namespace ecpoly {

/// Picks the edge to expand on. Called only on graphs that are connected,
/// have no isolated vertex and are not K_2 (so m >= 2).
using EdgeSelector = std::function<EdgeIndex(const Graph&)>;

/// First edge, in edge-index order, incident with a vertex of minimum degree.
EdgeIndex min_degree_edge(const Graph& g);

/// One expansion step R(G) = (x+1) R(G\uv) + x R(G\v) + x R(G\u).
struct RecurrenceTrace {
  std::string graph_key;
  Edge edge;
  IntPolynomial without_edge;  // R(G \ uv)
  IntPolynomial without_v;     // R(G \ v)
  IntPolynomial without_u;     // R(G \ u)
  IntPolynomial combined;
};

/// Evaluates the deletion recurrence
///
///   R(G) = (x+1) R(G\uv) + x R(G\v) + x R(G\u)
///
/// with base cases R(null graph) = 1, R(G) = 0 when G has an isolated vertex
/// or is disconnected, and R(K_2) = x.
///
/// This is the recurrence as stated, not E_c: when uv is a bridge of a
/// connected cover S, S\uv is not a connected cover of G\uv, so on graphs
/// such as C_4 the recurrence undercounts. Compare against the oracle rather
/// than assuming agreement.
///
/// Subproblems are memoised by canonical key and the selector is always
/// applied to the canonical relabelling, which makes R a function of the
/// isomorphism class. An engine is not thread safe; use one per task.
class RecurrenceEngine {
 public:
  explicit RecurrenceEngine(EdgeSelector selector = min_degree_edge, std::size_t max_depth = 256);

  IntPolynomial evaluate(const Graph& g);

  /// Expands on edge `first` of g as labelled (subcalls use the selector).
  /// Base cases take precedence over the forced edge.
  IntPolynomial evaluate_with_first_edge(const Graph& g, EdgeIndex first);

  /// The top-level step of evaluate_with_first_edge. Throws BadParameters if
  /// g is a base case.
  RecurrenceTrace trace(const Graph& g, EdgeIndex first);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const IntPolynomial* base_case(const Graph& g) const;
  IntPolynomial solve(const Graph& g, std::size_t depth);
  RecurrenceTrace expand(const Graph& g, EdgeIndex e, std::size_t depth);

  EdgeSelector selector_;
  std::size_t max_depth_;
  std::unordered_map<std::string, IntPolynomial> memo_;
  IntPolynomial zero_;
  IntPolynomial one_ = IntPolynomial::constant(1);
  IntPolynomial x_ = IntPolynomial::monomial(1, 1);
};

struct RecurrenceScanEntry {
  EdgeIndex edge_index = 0;
  Edge edge;
  IntPolynomial recurrence;
  IntPolynomial oracle;
  bool equal = false;
};

/// One entry per edge of g, that edge being the first expansion.
/// Throws SizeCapExceeded when g is beyond the oracle's edge cap.
std::vector<RecurrenceScanEntry> recurrence_scan(const Graph& g, const OracleConfig& cfg = {});

}  // namespace ecpoly
