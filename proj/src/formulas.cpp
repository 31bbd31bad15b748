#include "ecpoly/formulas.hpp"

#include <string>

#include "ecpoly/error.hpp"
#include "ecpoly/families.hpp"

namespace ecpoly {

namespace {

void require(bool ok, std::string_view id, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParameters, std::string(id) + ": " + what);
}

FormulaValue whole(IntPolynomial p) {
  FormulaValue v;
  v.range_high = p.is_zero() ? 0 : degree(p);
  v.polynomial = std::move(p);
  return v;
}

Coefficient as_coeff(std::size_t v) { return static_cast<Coefficient>(v); }

}  // namespace

std::vector<std::string_view> formula_ids() {
  return {"path", "cycle", "complete", "friendship", "corona_complete", "path_rec", "cycle_rec"};
}

FormulaValue formula_eval(std::string_view id, std::initializer_list<std::size_t> params, const OracleConfig& cfg) {
  return formula_eval(id, std::span<const std::size_t>(params.begin(), params.size()), cfg);
}

FormulaValue formula_eval(std::string_view id, std::span<const std::size_t> params, const OracleConfig& cfg) {
  auto arity = [&](std::size_t want) {
    require(params.size() == want, id, "expected " + std::to_string(want) + " parameter(s)");
  };

  if (id == "path") {
    arity(1);
    const std::size_t n = params[0];
    require(n >= 5, id, "n >= 5");
    return whole(IntPolynomial::monomial(1, n - 1));
  }
  if (id == "cycle") {
    arity(1);
    const std::size_t n = params[0];
    require(n >= 3, id, "n >= 3");
    IntPolynomial p;
    for (std::size_t i = n - 1; i <= n; ++i) p = add(p, IntPolynomial::monomial(binomial(as_coeff(n), as_coeff(i)), i));
    return whole(std::move(p));
  }
  if (id == "complete") {
    arity(1);
    const std::size_t n = params[0];
    require(n >= 3, id, "n >= 3");
    const IntPolynomial cover = edge_cover_polynomial(complete_graph(n), cfg);
    IntPolynomial removed;
    for (std::size_t i = (n + 1) / 2; i + 2 <= n; ++i) {
      removed = add(removed, IntPolynomial::monomial(coefficient(cover, i), i));
    }
    return whole(subtract(cover, removed));
  }
  if (id == "friendship") {
    arity(2);
    const std::size_t n = params[0];
    const std::size_t m = params[1];
    require(n >= 1 && m >= 3, id, "n >= 1 and m >= 3");
    IntPolynomial p;
    Coefficient power = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      p = add(p, IntPolynomial::monomial(checked_mul(binomial(as_coeff(n), as_coeff(i)), power), m * n - i));
      power = checked_mul(power, as_coeff(m));
    }
    return whole(std::move(p));
  }
  if (id == "corona_complete") {
    arity(1);
    const std::size_t n = params[0];
    require(n >= 3, id, "n >= 3");
    const std::size_t inner = n * (n - 1) / 2;
    FormulaValue v;
    v.range_low = 2 * n - 1;
    v.range_high = n + inner;
    for (std::size_t i = v.range_low; i <= v.range_high; ++i) {
      const Coefficient c = checked_add(binomial(as_coeff(inner), as_coeff(i - n)),
                                        -checked_mul(as_coeff(n), binomial(as_coeff(n - 1), as_coeff(i - n))));
      v.polynomial = add(v.polynomial, IntPolynomial::monomial(c, i));
    }
    return v;
  }
  if (id == "path_rec") {
    arity(1);
    const std::size_t n = params[0];
    require(n >= 3, id, "n >= 3");
    return whole(shift(connected_edge_cover_polynomial(path_graph(n - 1), cfg), 1));
  }
  if (id == "cycle_rec") {
    arity(1);
    const std::size_t n = params[0];
    require(n >= 4, id, "n >= 4");
    return whole(add(shift(connected_edge_cover_polynomial(cycle_graph(n - 1), cfg), 1), IntPolynomial::monomial(1, n - 1)));
  }
  throw Error(ErrorKind::UnknownClaim, "no formula named '" + std::string(id) + "'");
}

}  // namespace ecpoly
