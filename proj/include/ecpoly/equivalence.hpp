#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecpoly/graph.hpp"
#include "ecpoly/oracle.hpp"
#include "ecpoly/polynomial.hpp"

namespace ecpoly {

struct EquivalenceClass {
  IntPolynomial polynomial;
  /// Canonical keys of the distinct isomorphism classes sharing the polynomial, sorted.
  std::vector<std::string> members;

  bool has_non_isomorphic_members() const noexcept { return members.size() > 1; }
};

struct EquivalenceScan {
  /// Ordered by the first member's canonical key.
  std::vector<EquivalenceClass> classes;
  /// Every pair of non-isomorphic graphs with equal E_c, as (smaller key, larger key).
  std::vector<std::pair<std::string, std::string>> equivalent_pairs;
  /// Canonical keys of inputs with more than cfg.max_edges edges; these are
  /// left out of the partition instead of failing the scan.
  std::vector<std::string> skipped;
};

/// Partitions graphs by exact equality of E_c (computed by the oracle).
/// Isomorphic inputs collapse to one member.
EquivalenceScan equivalence_classes(std::span<const Graph> graphs, const OracleConfig& cfg = {});

}  // namespace ecpoly
