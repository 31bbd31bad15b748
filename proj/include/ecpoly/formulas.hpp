#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ecpoly/oracle.hpp"
#include "ecpoly/polynomial.hpp"

namespace ecpoly {

/// A closed form evaluated exactly as written, misprints included.
struct FormulaValue {
  IntPolynomial polynomial;
  /// Exponents on which the formula states coefficients. Outside this window
  /// the polynomial carries no information.
  std::size_t range_low = 0;
  std::size_t range_high = 0;
};

/// Formula ids and their parameters:
///   path n                 x^(n-1), n >= 5
///   cycle n                sum_{i=n-1}^{n} C(n,i) x^i, n >= 3
///   complete n             E(K_n) - sum_{i=ceil(n/2)}^{n-2} e(K_n,i) x^i, n >= 3
///                          (E(K_n) comes from the oracle)
///   friendship n m         sum_{i=0}^{n} C(n,i) m^i x^(mn-i), n >= 1, m >= 3
///   corona_complete n      C(n(n-1)/2, i-n) - n C(n-1, i-n) for
///                          2n-1 <= i <= n + n(n-1)/2, n >= 3
///   path_rec n             x E_c(P_(n-1)), n >= 3 (previous term from the oracle)
///   cycle_rec n            x E_c(C_(n-1)) + x^(n-1), n >= 4 (previous term from the oracle)
/// Throws BadParameters for parameters outside these ranges and UnknownClaim
/// for an unknown id.
FormulaValue formula_eval(std::string_view id, std::span<const std::size_t> params, const OracleConfig& cfg = {});
FormulaValue formula_eval(std::string_view id, std::initializer_list<std::size_t> params, const OracleConfig& cfg = {});

std::vector<std::string_view> formula_ids();

}  // namespace ecpoly
