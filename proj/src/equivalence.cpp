#include "ecpoly/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ecpoly/canonical.hpp"

namespace ecpoly {

EquivalenceScan equivalence_classes(std::span<const Graph> graphs, const OracleConfig& cfg) {
  std::map<std::string, const Graph*> distinct;
  std::set<std::string> skipped;
  for (const Graph& g : graphs) {
    std::string key = canonicalize(g);
    if (g.size() > cfg.max_edges) {
      skipped.insert(std::move(key));
      continue;
    }
    distinct.try_emplace(std::move(key), &g);
  }

  std::map<IntPolynomial, std::vector<std::string>> by_poly;
  for (const auto& [key, g] : distinct) by_poly[connected_edge_cover_polynomial(*g, cfg)].push_back(key);

  EquivalenceScan scan;
  for (auto& [poly, members] : by_poly) {
    // Keys arrive in sorted order because `distinct` is a sorted map.
    scan.classes.push_back(EquivalenceClass{poly, members});
  }
  std::sort(scan.classes.begin(), scan.classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) { return a.members.front() < b.members.front(); });
  for (const auto& cls : scan.classes) {
    for (std::size_t i = 0; i < cls.members.size(); ++i)
      for (std::size_t j = i + 1; j < cls.members.size(); ++j) scan.equivalent_pairs.emplace_back(cls.members[i], cls.members[j]);
  }
  std::sort(scan.equivalent_pairs.begin(), scan.equivalent_pairs.end());
  scan.skipped.assign(skipped.begin(), skipped.end());
  return scan;
}

}  // namespace ecpoly
