// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ecpoly/canonical.hpp"
#include "ecpoly/claims.hpp"
#include "ecpoly/cli.hpp"
#include "ecpoly/equivalence.hpp"
#include "ecpoly/families.hpp"
#include "ecpoly/formulas.hpp"
#include "ecpoly/graph6.hpp"
#include "ecpoly/oracle.hpp"
#include "ecpoly/recurrence.hpp"
#include "test_support.hpp"

using namespace ecpoly;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const VerificationEntry* find_entry(const VerificationReport& r, std::string_view id) {
  for (const auto& e : r.entries) {
    if (e.claim_id == id) return &e;
  }
  return nullptr;
}

bool tree_identity(const Graph& g, const OracleConfig& cfg) {
  return coefficient(connected_edge_cover_polynomial(g, cfg), g.order() - 1) == spanning_tree_count(g);
}

Outcome closed_forms() {
  Outcome o;
  for (std::size_t n = 2; n <= 12; ++n) {
    o.require(connected_edge_cover_polynomial(path_graph(n)) == IntPolynomial::monomial(1, n - 1), "P" + std::to_string(n));
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    const IntPolynomial want = add(IntPolynomial::monomial(static_cast<Coefficient>(n), n - 1), IntPolynomial::monomial(1, n));
    o.require(connected_edge_cover_polynomial(cycle_graph(n)) == want, "C" + std::to_string(n));
  }
  return o;
}

Outcome friendship() {
  Outcome o;
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 3}}) {
    o.require(connected_edge_cover_polynomial(friendship_graph(n, m)) == formula_eval("friendship", {n, m}).polynomial,
              "F" + std::to_string(n) + "," + std::to_string(m));
  }
  return o;
}

Outcome tree_coefficient() {
  Outcome o;
  const OracleConfig cfg{};
  std::vector<std::pair<std::string, Graph>> suite;
  for (std::size_t n = 2; n <= 6; ++n) suite.emplace_back("K" + std::to_string(n), complete_graph(n));
  for (std::size_t n = 3; n <= 10; ++n) suite.emplace_back("C" + std::to_string(n), cycle_graph(n));
  suite.emplace_back("petersen", petersen_graph());
  for (std::size_t n : {6, 8}) {
    for (auto& g : enumerate_connected_regular(n, 3)) suite.emplace_back(to_graph6(g), std::move(g));
  }
  std::mt19937_64 rng(20261014);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 10);
    const std::size_t m = std::min<std::size_t>(20, n - 1 + static_cast<std::size_t>(i % 11));
    Graph g = testing::random_connected_graph(n, m, rng);
    suite.emplace_back("random " + to_graph6(g), std::move(g));
  }
  o.require(suite.size() == 5 + 8 + 1 + 2 + 5 + 50, "suite size");
  for (const auto& [name, g] : suite) o.require(tree_identity(g, cfg), name);
  return o;
}

Outcome cubic_constants() {
  Outcome o;
  const auto ids = suite_claims("paper-all");
  const VerificationReport a = verify_claims(ids, {28, 1});
  const VerificationReport b = verify_claims(ids, {28, 0});
  o.require(a == b, "report differs between runs");

  const auto* k33 = find_entry(a, "cubic6_81:Kb3,3");
  o.require(k33 && k33->status == ClaimStatus::Agree && k33->computed == "81", "cubic6_81:Kb3,3 not AGREE 81");
  const auto* prism = find_entry(a, "cubic6_81:prism3");
  o.require(prism && prism->computed == std::to_string(spanning_tree_count(circular_ladder(3))), "prism entry");

  const auto cubic8 = enumerate_connected_regular(8, 3);
  o.require(cubic8.size() == 5, "five cubic graphs of order 8");
  for (const Graph& g : cubic8) {
    const auto* e = find_entry(a, "cubic8_e7:" + to_graph6(g));
    o.require(e != nullptr, "missing cubic8_e7 entry for " + to_graph6(g));
    if (e == nullptr) continue;
    o.require(e->claimed.find("324") != std::string::npos, "claimed multiset not recorded");
    o.require(e->computed == std::to_string(spanning_tree_count(g)), "cubic8 computed column vs tree count");
  }
  const auto* multiset = find_entry(a, "cubic8_e7:multiset");
  o.require(multiset && multiset->claimed == "{324, 332, 332, 338, 344}", "claimed multiset entry");

  const auto* pet = find_entry(a, "petersen_9:petersen");
  o.require(pet != nullptr, "missing petersen_9");
  if (pet) {
    o.require(pet->claimed == "235", "petersen claimed");
    o.require(pet->computed == std::to_string(spanning_tree_count(petersen_graph())) && pet->computed == "2000",
              "petersen computed");
    o.require(pet->status == ClaimStatus::Disagree, "petersen_9 should disagree");
  }

  std::ostringstream out;
  std::ostringstream err;
  o.require(cli::run({"verify", "--suite", "paper-all"}, out, err) == cli::kDisagreement, "verify exit code");
  return o;
}

Outcome recurrence_counterexamples() {
  Outcome o;
  const auto p4 = recurrence_scan(path_graph(4));
  const EdgeIndex middle = path_graph(4).find_edge(1, 2);
  o.require(p4[middle].recurrence.is_zero() && p4[middle].oracle == IntPolynomial({0, 0, 0, 1}), "P4 middle edge");
  for (const auto& e : recurrence_scan(cycle_graph(4))) {
    o.require(e.recurrence == IntPolynomial({0, 0, 0, 3, 1}) && e.oracle == IntPolynomial({0, 0, 0, 4, 1}), "C4 edge");
  }
  for (const auto& e : recurrence_scan(cycle_graph(3))) o.require(e.equal, "C3 edge");
  return o;
}

Outcome corona() {
  Outcome o;
  for (const char* name : {"P3", "C4", "K4"}) {
    const Graph base = parse_graph_input(name);
    const std::size_t n = base.order();
    o.require(min_support(connected_edge_cover_polynomial(corona_k1(base))) == 2 * n - 1, name);
  }
  const VerificationReport r = verify_claims(std::vector<std::string>{"corona_complete"});
  const auto* e = find_entry(r, "corona_complete:n=03:i=05");
  o.require(e && e->claimed == "0" && e->computed == "3" && e->status == ClaimStatus::Disagree, "n=3 discrepancy");
  return o;
}

Outcome equivalence_scan() {
  Outcome o;
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
  }
  const EquivalenceScan scan = equivalence_classes(graphs, OracleConfig{15, 0});
  for (std::size_t n = 1; n <= 6; ++n) {
    const IntPolynomial target = connected_edge_cover_polynomial(complete_graph(n));
    for (const auto& cls : scan.classes) {
      if (cls.polynomial == target) {
        o.require(cls.members == std::vector<std::string>{canonicalize(complete_graph(n))}, "K" + std::to_string(n));
      }
    }
  }
  const std::string p4 = canonicalize(path_graph(4));
  const std::string star = canonicalize(complete_bipartite_graph(1, 3));
  const std::pair<std::string, std::string> trees{std::min(p4, star), std::max(p4, star)};
  o.require(std::find(scan.equivalent_pairs.begin(), scan.equivalent_pairs.end(), trees) != scan.equivalent_pairs.end(),
            "P4 ~ K1,3 missing");
  return o;
}

Outcome catalog() {
  Outcome o;
  const std::size_t expected[] = {1, 2, 5};
  std::vector<Graph> all;
  for (std::size_t i = 0; i < 3; ++i) {
    auto graphs = enumerate_connected_regular(4 + 2 * i, 3);
    o.require(graphs.size() == expected[i], "cubic count n=" + std::to_string(4 + 2 * i));
    for (auto& g : graphs) all.push_back(std::move(g));
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto& g : enumerate_connected_graphs(n)) all.push_back(std::move(g));
  }
  std::mt19937_64 rng(8);
  for (const Graph& g : all) {
    o.require(parse_graph6(to_graph6(g)) == g, "graph6 round trip " + to_graph6(g));
    o.require(canonicalize(relabel(g, testing::random_permutation(g.order(), rng))) == canonicalize(g),
              "relabel invariance " + to_graph6(g));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const IntPolynomial pet = connected_edge_cover_polynomial(petersen_graph());
  const double pet_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(pet_s < 1.0, "Petersen took " + std::to_string(pet_s) + " s");
  o.require(coefficient(pet, 9) == 2000, "Petersen coefficient");

  std::mt19937_64 rng(24);
  const Graph g = testing::random_connected_graph(12, 24, rng);
  const auto t0 = std::chrono::steady_clock::now();
  const std::string parallel = to_json(connected_edge_cover_polynomial(g, {28, 4})).dump();
  const double par_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(par_s < 60.0, "m=24 took " + std::to_string(par_s) + " s");
  const std::string single = to_json(connected_edge_cover_polynomial(g, {28, 1})).dump();
  o.require(parallel == single, "parallel output differs");
  o.require(to_json(connected_edge_cover_polynomial(g, {28, 8})).dump() == single, "8 workers differ");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "closed forms for paths and cycles", 1.0, closed_forms},
      {2, "friendship formula", 10.0, friendship},
      {3, "spanning-tree coefficient identity", 120.0, tree_coefficient},
      {4, "cubic constants report", 120.0, cubic_constants},
      {5, "recurrence counterexamples", 1.0, recurrence_counterexamples},
      {6, "corona minimum support and discrepancy", 10.0, corona},
      {7, "equivalence and uniqueness scan", 300.0, equivalence_scan},
      {8, "catalog counts and invariance", 60.0, catalog},
      {9, "determinism and performance", 120.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_s) {
      o.ok = false;
      o.detail = "over time limit";
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_s, o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
