#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecpoly/graph.hpp"

namespace ecpoly {

enum class FamilyKind {
  Path,               // P<n>, n >= 1
  Cycle,              // C<n>, n >= 3
  Complete,           // K<n>, n >= 1
  CompleteBipartite,  // Kb<a>,<b>, a, b >= 1
  Friendship,         // F<n>,<m>: n cycles of length m through vertex 0
  CoronaK1,           // corona(<graph>): one pendant vertex per base vertex
  Petersen,           // petersen
  CircularLadder,     // prism<k>, k >= 3
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<std::size_t> parameters;
  std::shared_ptr<const Graph> base;  // CoronaK1 only
};

/// Labelling is fixed per family: paths and cycles run 0..n-1 in order;
/// Kb<a>,<b> puts side A at 0..a-1; the friendship hub is 0 and cycle j uses
/// 1+j(m-1)..(j+1)(m-1); corona pendants are base.order()+v for base vertex v;
/// Petersen has outer cycle 0-4, inner pentagram 5-9 (i+5 ~ (i+2)%5+5) and
/// spokes i ~ i+5; prism<k> has outer cycle 0..k-1, inner cycle k..2k-1 and
/// spokes i ~ i+k. Throws BadParameters.
Graph make_family(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph friendship_graph(std::size_t cycles, std::size_t cycle_length);
Graph corona_k1(const Graph& base);
Graph petersen_graph();
Graph circular_ladder(std::size_t k);

/// Parses the family grammar ("P7", "C9", "K5", "Kb3,3", "F2,3", "petersen",
/// "prism3", "corona(K4)"). Returns nullopt when the text is not in the
/// grammar; throws BadParameters when it is but the parameters are invalid.
/// The argument of corona(...) may itself be any graph input.
std::optional<FamilySpec> parse_family_spec(std::string_view text);

/// Family spec if the text matches the grammar, graph6 otherwise.
Graph parse_graph_input(std::string_view text);

/// Connected k-regular graphs on n vertices, one per isomorphism class,
/// sorted by canonical key. Requires n*k even and n <= 12 (SizeCapExceeded).
std::vector<Graph> enumerate_connected_regular(std::size_t n, std::size_t k);

struct RegularCounts {
  std::size_t connected = 0;
  std::size_t total = 0;  // including disconnected graphs
};

/// Isomorphism-class counts of k-regular graphs on n vertices, connected and
/// all. The total is assembled from connected counts of smaller orders.
RegularCounts count_regular_graphs(std::size_t n, std::size_t k);

/// All graphs on n vertices up to isomorphism, sorted by canonical key (n <= 7).
std::vector<Graph> enumerate_all_graphs(std::size_t n);
/// Connected graphs on n vertices up to isomorphism, sorted by canonical key (n <= 7).
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

inline constexpr std::size_t kMaxRegularOrder = 12;
inline constexpr std::size_t kMaxGeneralOrder = 7;

}  // namespace ecpoly
