#include "ecpoly/graph6.hpp"

#include <vector>

#include "ecpoly/error.hpp"

namespace ecpoly {

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty string");
  const auto first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw Error(ErrorKind::UnsupportedSize, "long-form graph6 (n > 62)");
  if (first < 63 || first > 126) throw Error(ErrorKind::MalformedGraph6, "order byte out of range");
  const std::size_t n = first - 63;
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(1 + bytes) + " bytes for n=" +
                                                std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  std::vector<bool> stream;
  stream.reserve(bytes * 6);
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Error(ErrorKind::MalformedGraph6, "data byte out of range at offset " + std::to_string(i));
    const unsigned value = c - 63U;
    for (int b = 5; b >= 0; --b) stream.push_back(((value >> b) & 1U) != 0);
  }
  for (std::size_t k = bits; k < stream.size(); ++k) {
    if (stream[k]) throw Error(ErrorKind::MalformedGraph6, "non-zero padding bits");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (stream[k]) pairs.emplace_back(i, j);
    }
  }
  return build_graph(n, pairs);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 62) throw Error(ErrorKind::UnsupportedSize, "graph6 short form needs n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const std::uint64_t column = g.neighbours(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<unsigned>((column >> i) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace ecpoly
