#include "ecpoly/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>

#include "ecpoly/canonical.hpp"
#include "ecpoly/error.hpp"
#include "ecpoly/graph6.hpp"
#include "ecpoly/polynomial.hpp"

namespace ecpoly {

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadParameters, what); }

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

Graph path_graph(std::size_t n) {
  if (n < 1) bad("path needs n >= 1");
  Pairs p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(vx(i), vx(i + 1));
  return build_graph(n, p);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) bad("cycle needs n >= 3");
  Pairs p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(vx(i), vx((i + 1) % n));
  return build_graph(n, p);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) bad("complete graph needs n >= 1");
  Pairs p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(vx(i), vx(j));
  return build_graph(n, p);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) bad("complete bipartite graph needs a, b >= 1");
  Pairs p;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) p.emplace_back(vx(i), vx(a + j));
  return build_graph(a + b, p);
}

Graph friendship_graph(std::size_t cycles, std::size_t cycle_length) {
  if (cycles < 1 || cycle_length < 3) bad("friendship graph needs n >= 1 and m >= 3");
  const std::size_t per = cycle_length - 1;
  Pairs p;
  for (std::size_t j = 0; j < cycles; ++j) {
    const std::size_t first = 1 + j * per;
    p.emplace_back(0, vx(first));
    for (std::size_t t = 0; t + 1 < per; ++t) p.emplace_back(vx(first + t), vx(first + t + 1));
    p.emplace_back(vx(first + per - 1), 0);
  }
  return build_graph(1 + cycles * per, p);
}

Graph corona_k1(const Graph& base) {
  const std::size_t n = base.order();
  Pairs p;
  for (const Edge& e : base.edges()) p.emplace_back(e.u, e.v);
  for (std::size_t v = 0; v < n; ++v) p.emplace_back(vx(v), vx(n + v));
  return build_graph(2 * n, p);
}

Graph petersen_graph() {
  Pairs p;
  for (std::size_t i = 0; i < 5; ++i) {
    p.emplace_back(vx(i), vx((i + 1) % 5));
    p.emplace_back(vx(i + 5), vx((i + 2) % 5 + 5));
    p.emplace_back(vx(i), vx(i + 5));
  }
  return build_graph(10, p);
}

Graph circular_ladder(std::size_t k) {
  if (k < 3) bad("prism needs k >= 3");
  Pairs p;
  for (std::size_t i = 0; i < k; ++i) {
    p.emplace_back(vx(i), vx((i + 1) % k));
    p.emplace_back(vx(k + i), vx(k + (i + 1) % k));
    p.emplace_back(vx(i), vx(k + i));
  }
  return build_graph(2 * k, p);
}

Graph make_family(const FamilySpec& spec) {
  const auto& a = spec.parameters;
  auto arity = [&a](std::size_t want) {
    if (a.size() != want) bad("expected " + std::to_string(want) + " parameter(s), got " + std::to_string(a.size()));
  };
  switch (spec.kind) {
    case FamilyKind::Path: arity(1); return path_graph(a[0]);
    case FamilyKind::Cycle: arity(1); return cycle_graph(a[0]);
    case FamilyKind::Complete: arity(1); return complete_graph(a[0]);
    case FamilyKind::CompleteBipartite: arity(2); return complete_bipartite_graph(a[0], a[1]);
    case FamilyKind::Friendship: arity(2); return friendship_graph(a[0], a[1]);
    case FamilyKind::Petersen: arity(0); return petersen_graph();
    case FamilyKind::CircularLadder: arity(1); return circular_ladder(a[0]);
    case FamilyKind::CoronaK1:
      arity(0);
      if (!spec.base) bad("corona needs a base graph");
      return corona_k1(*spec.base);
  }
  bad("unknown family");
}

namespace {

// Parses a comma separated list of decimal numbers; nullopt if the text has
// any other character or is empty.
std::optional<std::vector<std::size_t>> parse_numbers(std::string_view text, std::size_t count) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(pos, end - pos);
    if (field.empty() || field.size() > 6) return std::nullopt;
    std::size_t value = 0;
    for (char c : field) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    out.push_back(value);
    pos = end + 1;
  }
  if (out.size() != count) return std::nullopt;
  return out;
}

}  // namespace

std::optional<FamilySpec> parse_family_spec(std::string_view text) {
  auto with = [](FamilyKind kind, std::vector<std::size_t> params) {
    FamilySpec spec{kind, std::move(params), nullptr};
    make_family(spec);  // validates ranges
    return spec;
  };
  if (text == "petersen") return with(FamilyKind::Petersen, {});
  if (text.starts_with("corona(") && text.ends_with(")")) {
    auto inner = text.substr(7, text.size() - 8);
    FamilySpec spec{FamilyKind::CoronaK1, {}, std::make_shared<const Graph>(parse_graph_input(inner))};
    return spec;
  }
  if (text.starts_with("prism")) {
    if (auto nums = parse_numbers(text.substr(5), 1)) return with(FamilyKind::CircularLadder, *nums);
    return std::nullopt;
  }
  if (text.starts_with("Kb")) {
    if (auto nums = parse_numbers(text.substr(2), 2)) return with(FamilyKind::CompleteBipartite, *nums);
    return std::nullopt;
  }
  if (text.size() < 2) return std::nullopt;
  const auto rest = text.substr(1);
  switch (text[0]) {
    case 'P':
      if (auto nums = parse_numbers(rest, 1)) return with(FamilyKind::Path, *nums);
      break;
    case 'C':
      if (auto nums = parse_numbers(rest, 1)) return with(FamilyKind::Cycle, *nums);
      break;
    case 'K':
      if (auto nums = parse_numbers(rest, 1)) return with(FamilyKind::Complete, *nums);
      break;
    case 'F':
      if (auto nums = parse_numbers(rest, 2)) return with(FamilyKind::Friendship, *nums);
      break;
    default:
      break;
  }
  return std::nullopt;
}

Graph parse_graph_input(std::string_view text) {
  if (auto spec = parse_family_spec(text)) return make_family(*spec);
  return parse_graph6(text);
}

namespace {

// Generates connected k-regular graphs in breadth-first normal form: vertices
// are processed in label order, and when vertex v is processed its missing
// neighbours are drawn from already discovered unprocessed vertices or
// created as a block of fresh labels. Every connected graph admits such a
// labelling (a BFS order), so the output covers every isomorphism class.
class RegularGenerator {
 public:
  RegularGenerator(std::size_t n, std::size_t k) : n_(n), k_(k), adj_(n, 0), deg_(n, 0) {}

  std::vector<Graph> run() {
    discovered_ = 1;
    process(0);
    std::vector<Graph> out;
    out.reserve(found_.size());
    for (auto& [key, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  void connect(std::size_t a, std::size_t b) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
    ++deg_[a];
    ++deg_[b];
  }
  void disconnect(std::size_t a, std::size_t b) {
    adj_[a] &= ~(std::uint64_t{1} << b);
    adj_[b] &= ~(std::uint64_t{1} << a);
    --deg_[a];
    --deg_[b];
  }

  void process(std::size_t v) {
    if (v == n_) {
      if (discovered_ == n_) emit();
      return;
    }
    if (v >= discovered_) return;
    std::vector<std::size_t> candidates;
    for (std::size_t w = v + 1; w < discovered_; ++w) {
      if (deg_[w] < k_ && ((adj_[v] >> w) & 1U) == 0) candidates.push_back(w);
    }
    choose(v, candidates, 0, k_ - deg_[v]);
  }

  void choose(std::size_t v, const std::vector<std::size_t>& candidates, std::size_t idx, std::size_t need) {
    if (need > 0 && idx < candidates.size()) {
      const std::size_t w = candidates[idx];
      connect(v, w);
      choose(v, candidates, idx + 1, need - 1);
      disconnect(v, w);
      choose(v, candidates, idx + 1, need);
      return;
    }
    if (discovered_ + need > n_) return;
    const std::size_t first_new = discovered_;
    for (std::size_t t = 0; t < need; ++t) connect(v, first_new + t);
    discovered_ += need;
    if (feasible(v)) process(v + 1);
    discovered_ -= need;
    for (std::size_t t = 0; t < need; ++t) disconnect(v, first_new + t);
  }

  // Every unprocessed vertex must still be able to reach degree k using
  // other unprocessed vertices only.
  bool feasible(std::size_t v) const {
    if (v + 1 == n_) return true;
    const std::uint64_t open = (n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1)) &
                               ~((std::uint64_t{1} << (v + 1)) - 1);
    for (std::size_t w = v + 1; w < discovered_; ++w) {
      const std::uint64_t partners = open & ~adj_[w] & ~(std::uint64_t{1} << w);
      if (k_ - deg_[w] > static_cast<std::size_t>(std::popcount(partners))) return false;
    }
    return true;
  }

  void emit() {
    Pairs p;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if ((adj_[a] >> b) & 1U) p.emplace_back(vx(a), vx(b));
    auto form = canonical_form(build_graph(n_, p));
    found_.try_emplace(std::move(form.key), std::move(form.graph));
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t discovered_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> deg_;
  std::map<std::string, Graph> found_;
};

void check_regular_parameters(std::size_t n, std::size_t k) {
  if (n < 1) bad("regular enumeration needs n >= 1");
  if ((n * k) % 2 != 0) bad("n*k must be even");
  if (n > kMaxRegularOrder) {
    throw Error(ErrorKind::SizeCapExceeded, "regular enumeration supports n <= " + std::to_string(kMaxRegularOrder));
  }
}

}  // namespace

std::vector<Graph> enumerate_connected_regular(std::size_t n, std::size_t k) {
  check_regular_parameters(n, k);
  if (k >= n) {
    if (n == 1 && k == 0) return {build_graph(1, {})};
    return {};
  }
  return RegularGenerator(n, k).run();
}

RegularCounts count_regular_graphs(std::size_t n, std::size_t k) {
  check_regular_parameters(n, k);
  // ways[j] = number of multisets of connected k-regular graphs of total order j.
  std::vector<Coefficient> ways(n + 1, 0);
  ways[0] = 1;
  RegularCounts counts;
  for (std::size_t order = 1; order <= n; ++order) {
    if ((order * k) % 2 != 0) continue;
    const auto types = static_cast<Coefficient>(enumerate_connected_regular(order, k).size());
    if (order == n) counts.connected = static_cast<std::size_t>(types);
    if (types == 0) continue;
    // Add components of this order: choosing r of them from `types` kinds
    // with repetition gives C(types + r - 1, r) multisets.
    std::vector<Coefficient> next = ways;
    for (std::size_t base = 0; base <= n; ++base) {
      if (ways[base] == 0) continue;
      for (std::size_t r = 1; base + r * order <= n; ++r) {
        next[base + r * order] += ways[base] * binomial(types + static_cast<Coefficient>(r) - 1, static_cast<Coefficient>(r));
      }
    }
    ways = std::move(next);
  }
  counts.total = static_cast<std::size_t>(ways[n]);
  return counts;
}

std::vector<Graph> enumerate_all_graphs(std::size_t n) {
  if (n > kMaxGeneralOrder) {
    throw Error(ErrorKind::SizeCapExceeded, "graph enumeration supports n <= " + std::to_string(kMaxGeneralOrder));
  }
  // Every graph on n vertices is a graph on n-1 vertices plus one vertex with
  // some neighbourhood, so extending each class by every neighbourhood and
  // deduplicating by canonical key is exhaustive.
  std::vector<Graph> level{build_graph(0, {})};
  for (std::size_t order = 1; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      Pairs base;
      for (const Edge& e : g.edges()) base.emplace_back(e.u, e.v);
      const std::size_t prev = order - 1;
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << prev); ++nb) {
        Pairs p = base;
        for (std::size_t w = 0; w < prev; ++w) {
          if ((nb >> w) & 1U) p.emplace_back(vx(w), vx(prev));
        }
        auto form = canonical_form(build_graph(order, p));
        next.try_emplace(std::move(form.key), std::move(form.graph));
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  auto all = enumerate_all_graphs(n);
  std::vector<Graph> out;
  for (auto& g : all) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ecpoly
