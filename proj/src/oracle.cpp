#include "ecpoly/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>
#include <vector>

#include "ecpoly/error.hpp"

namespace ecpoly {

__extension__ using Wide128 = __int128;

namespace {

// Precomputed data for one enumeration. The vertex set touched by a subset is
// assembled from per-group lookup tables over at most 16 edge bits each
// instead of being rebuilt edge by edge.
struct CoverTable {
  std::size_t shift = 0;
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> cover;
};

struct Plan {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t all_vertices = 0;
  std::vector<CoverTable> tables;
  std::array<std::uint8_t, 64> eu{};
  std::array<std::uint8_t, 64> ev{};
  bool connected = false;
  std::size_t min_size = 0;
};

Plan make_plan(const Graph& g, bool connected) {
  Plan p;
  p.n = g.order();
  p.m = g.size();
  p.all_vertices = p.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.n) - 1;
  p.connected = connected;
  // A connected spanning subgraph needs n-1 edges; any cover needs ceil(n/2).
  p.min_size = connected ? p.n - 1 : (p.n + 1) / 2;
  std::vector<std::uint64_t> ends(p.m);
  for (EdgeIndex e = 0; e < p.m; ++e) {
    const Edge& ed = g.edge(e);
    p.eu[e] = static_cast<std::uint8_t>(ed.u);
    p.ev[e] = static_cast<std::uint8_t>(ed.v);
    ends[e] = (std::uint64_t{1} << ed.u) | (std::uint64_t{1} << ed.v);
  }
  const std::size_t groups = std::max<std::size_t>(1, (p.m + 15) / 16);
  for (std::size_t gi = 0, offset = 0; gi < groups; ++gi) {
    const std::size_t bits = (p.m - offset) / (groups - gi);
    CoverTable t;
    t.shift = offset;
    t.mask = (std::uint64_t{1} << bits) - 1;
    t.cover.assign(std::size_t{1} << bits, 0);
    for (std::size_t s = 1; s < t.cover.size(); ++s) {
      const auto lowest = static_cast<std::size_t>(std::countr_zero(s));
      t.cover[s] = t.cover[s & (s - 1)] | ends[offset + lowest];
    }
    p.tables.push_back(std::move(t));
    offset += bits;
  }
  return p;
}

// Given that the subset covers every vertex, it is connected iff union-find
// performs n-1 successful merges.
bool spans_connected(const Plan& p, std::uint64_t subset) {
  std::array<std::uint8_t, 64> parent;
  for (std::size_t v = 0; v < p.n; ++v) parent[v] = static_cast<std::uint8_t>(v);
  auto find = [&parent](std::uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t merges = 0;
  const std::size_t needed = p.n - 1;
  for (std::uint64_t s = subset; s != 0; s &= s - 1) {
    const int e = std::countr_zero(s);
    const std::uint8_t a = find(p.eu[e]);
    const std::uint8_t b = find(p.ev[e]);
    if (a != b) {
      parent[a] = b;
      if (++merges == needed) return true;
    }
  }
  return false;
}

void count_range(const Plan& p, std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
  for (std::uint64_t s = begin; s != end; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < p.min_size) continue;
    std::uint64_t covered = 0;
    for (const CoverTable& t : p.tables) covered |= t.cover[(s >> t.shift) & t.mask];
    if (covered != p.all_vertices) continue;
    if (p.connected && !spans_connected(p, s)) continue;
    ++counts[size];
  }
}

std::size_t resolve_workers(const OracleConfig& cfg) {
  if (cfg.worker_count != 0) return cfg.worker_count;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Visits all 2^m subsets in chunks keyed by their high-bit prefix. Workers
// claim chunks from a shared counter and keep private tallies, which are
// summed afterwards, so the result does not depend on scheduling.
IntPolynomial enumerate(const Graph& g, const OracleConfig& cfg, bool connected) {
  if (cfg.max_edges > kOracleEdgeLimit) {
    throw Error(ErrorKind::BadParameters, "max_edges must be <= " + std::to_string(kOracleEdgeLimit));
  }
  if (g.size() > cfg.max_edges) {
    throw Error(ErrorKind::SizeCapExceeded,
                "m=" + std::to_string(g.size()) + " exceeds max_edges=" + std::to_string(cfg.max_edges));
  }
  if (g.order() == 0) return IntPolynomial::constant(1);
  if (g.has_isolated_vertex()) return {};
  if (connected && !is_connected(g)) return {};

  const Plan plan = make_plan(g, connected);
  const std::size_t m = plan.m;
  const std::size_t prefix_bits = std::min<std::size_t>(m, 10);
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  const std::uint64_t chunk_size = std::uint64_t{1} << (m - prefix_bits);
  const std::size_t workers = std::min<std::uint64_t>(resolve_workers(cfg), chunks);

  std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(m + 1, 0));
  std::atomic<std::uint64_t> next{0};
  auto work = [&](std::size_t id) {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      count_range(plan, c * chunk_size, (c + 1) * chunk_size, tallies[id]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  std::vector<Coefficient> coeffs(m + 1, 0);
  for (const auto& t : tallies)
    for (std::size_t i = 0; i <= m; ++i) coeffs[i] += static_cast<Coefficient>(t[i]);
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial connected_edge_cover_polynomial(const Graph& g, const OracleConfig& cfg) {
  return enumerate(g, cfg, true);
}

IntPolynomial edge_cover_polynomial(const Graph& g, const OracleConfig& cfg) { return enumerate(g, cfg, false); }

std::int64_t spanning_tree_count(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::BadParameters, "spanning tree count needs n >= 1");
  if (n == 1) return 1;
  if (!is_connected(g)) return 0;

  // Laplacian with the last row and column removed.
  const std::size_t r = n - 1;
  std::vector<std::vector<Wide128>> a(r, std::vector<Wide128>(r, 0));
  for (std::size_t i = 0; i < r; ++i) a[i][i] = static_cast<Wide128>(g.degree(static_cast<Vertex>(i)));
  for (const Edge& e : g.edges()) {
    if (e.u < r && e.v < r) {
      a[e.u][e.v] = -1;
      a[e.v][e.u] = -1;
    }
  }

  auto mul = [](Wide128 x, Wide128 y) {
    Wide128 out;
    if (__builtin_mul_overflow(x, y, &out)) throw Error(ErrorKind::IntegerOverflow, "Bareiss elimination");
    return out;
  };
  auto sub = [](Wide128 x, Wide128 y) {
    Wide128 out;
    if (__builtin_sub_overflow(x, y, &out)) throw Error(ErrorKind::IntegerOverflow, "Bareiss elimination");
    return out;
  };

  // Bareiss: after step k every entry below/right of the pivot is a k+1 by
  // k+1 minor, so the division by the previous pivot is exact.
  int sign = 1;
  Wide128 prev = 1;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < r && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == r) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) {
        a[i][j] = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const Wide128 det = sign * a[r - 1][r - 1];
  if (det > INT64_MAX || det < 0) throw Error(ErrorKind::IntegerOverflow, "spanning tree count");
  return static_cast<std::int64_t>(det);
}

}  // namespace ecpoly
