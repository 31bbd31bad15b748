#include "ecpoly/stats.hpp"

#include <algorithm>

#include "ecpoly/error.hpp"

namespace ecpoly {

PolyStats poly_stats(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "statistics of the zero polynomial");
  if (std::any_of(p.coeffs().begin(), p.coeffs().end(), [](Coefficient c) { return c < 0; })) {
    throw Error(ErrorKind::BadParameters, "negative coefficient");
  }
  PolyStats s;
  s.size_m = degree(p);
  s.rho_c = min_support(p);
  const auto m = static_cast<std::int64_t>(s.size_m);
  for (std::size_t i = 0; i <= s.size_m; ++i) {
    if (coefficient(p, i) == binomial(m, static_cast<std::int64_t>(i))) {
      s.i0 = i;
      s.delta = s.size_m - i + 1;
      break;
    }
  }
  return s;
}

}  // namespace ecpoly
