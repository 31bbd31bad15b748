#pragma once

#include <string>
#include <string_view>

#include "ecpoly/graph.hpp"

namespace ecpoly {

/// Parses a short-form graph6 string (n <= 62). Surrounding whitespace is
/// not accepted; callers strip line endings. Throws MalformedGraph6 or
/// UnsupportedSize.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6: byte n+63, then the upper triangle read column by
/// column ((0,1),(0,2),(1,2),(0,3),...), six bits per byte offset by 63,
/// zero padded.
std::string to_graph6(const Graph& g);

}  // namespace ecpoly
