#include "ecpoly/recurrence.hpp"

#include "ecpoly/canonical.hpp"
#include "ecpoly/error.hpp"

namespace ecpoly {

EdgeIndex min_degree_edge(const Graph& g) {
  const std::size_t low = g.min_degree();
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.degree(ed.u) == low || g.degree(ed.v) == low) return e;
  }
  throw Error(ErrorKind::EdgeOutOfRange, "graph has no edges");
}

RecurrenceEngine::RecurrenceEngine(EdgeSelector selector, std::size_t max_depth)
    : selector_(std::move(selector)), max_depth_(max_depth) {}

const IntPolynomial* RecurrenceEngine::base_case(const Graph& g) const {
  if (g.order() == 0) return &one_;
  if (g.has_isolated_vertex() || !is_connected(g)) return &zero_;
  if (g.order() == 2 && g.size() == 1) return &x_;
  return nullptr;
}

IntPolynomial RecurrenceEngine::evaluate(const Graph& g) { return solve(g, 0); }

IntPolynomial RecurrenceEngine::evaluate_with_first_edge(const Graph& g, EdgeIndex first) {
  if (first >= g.size()) throw Error(ErrorKind::EdgeOutOfRange, "edge index " + std::to_string(first));
  if (const auto* base = base_case(g)) return *base;
  return expand(g, first, 0).combined;
}

RecurrenceTrace RecurrenceEngine::trace(const Graph& g, EdgeIndex first) {
  if (first >= g.size()) throw Error(ErrorKind::EdgeOutOfRange, "edge index " + std::to_string(first));
  if (base_case(g) != nullptr) throw Error(ErrorKind::BadParameters, "graph is a base case of the recurrence");
  return expand(g, first, 0);
}

IntPolynomial RecurrenceEngine::solve(const Graph& g, std::size_t depth) {
  if (const auto* base = base_case(g)) return *base;
  if (depth > max_depth_) {
    throw Error(ErrorKind::RecursionDepthExceeded, "depth " + std::to_string(depth));
  }
  CanonicalForm form = canonical_form(g);
  if (auto it = memo_.find(form.key); it != memo_.end()) return it->second;
  const EdgeIndex e = selector_(form.graph);
  if (e >= form.graph.size()) throw Error(ErrorKind::EdgeOutOfRange, "selector returned " + std::to_string(e));
  IntPolynomial result = expand(form.graph, e, depth).combined;
  memo_.emplace(std::move(form.key), result);
  return result;
}

RecurrenceTrace RecurrenceEngine::expand(const Graph& g, EdgeIndex e, std::size_t depth) {
  RecurrenceTrace t;
  t.graph_key = canonicalize(g);
  t.edge = g.edge(e);
  t.without_edge = solve(delete_edge(g, e), depth + 1);
  t.without_v = solve(delete_vertex(g, t.edge.v), depth + 1);
  t.without_u = solve(delete_vertex(g, t.edge.u), depth + 1);
  t.combined = add(add(shift(t.without_edge, 1), t.without_edge),
                   add(shift(t.without_v, 1), shift(t.without_u, 1)));
  return t;
}

std::vector<RecurrenceScanEntry> recurrence_scan(const Graph& g, const OracleConfig& cfg) {
  const IntPolynomial oracle = connected_edge_cover_polynomial(g, cfg);
  RecurrenceEngine engine;
  std::vector<RecurrenceScanEntry> out;
  out.reserve(g.size());
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    RecurrenceScanEntry entry;
    entry.edge_index = e;
    entry.edge = g.edge(e);
    entry.recurrence = engine.evaluate_with_first_edge(g, e);
    entry.oracle = oracle;
    entry.equal = entry.recurrence == oracle;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace ecpoly
