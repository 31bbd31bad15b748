#pragma once

#include <cstddef>
#include <optional>

#include "ecpoly/polynomial.hpp"

namespace ecpoly {

/// Statistics read off an edge cover polynomial.
///
/// delta is the quantity m - i0 + 1, which equals the minimum degree only
/// when every i >= m - delta + 1 gives e_c(G, i) = C(m, i). That fails on
/// graphs with bridges, so treat delta as a derived statistic and not as
/// the minimum degree of G.
struct PolyStats {
  std::size_t size_m = 0;  // degree
  std::size_t rho_c = 0;   // least exponent with a non-zero coefficient
  std::optional<std::size_t> i0;     // least i with coefficient(i) == C(size_m, i)
  std::optional<std::size_t> delta;  // size_m - i0 + 1

  friend bool operator==(const PolyStats&, const PolyStats&) = default;
};

/// Throws ZeroPolynomial for the zero polynomial and BadParameters when a
/// coefficient is negative.
PolyStats poly_stats(const IntPolynomial& p);

}  // namespace ecpoly
