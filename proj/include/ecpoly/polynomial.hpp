#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"

namespace ecpoly {

using Coefficient = std::int64_t;

/// Dense univariate polynomial with exact 64-bit coefficients.
///
/// coeffs()[i] is the coefficient of x^i. The representation never carries
/// trailing zeros, so the zero polynomial has no coefficients and equality
/// is plain vector equality. Arithmetic that would leave the 64-bit range
/// throws IntegerOverflow instead of wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coefficient> coeffs);
  IntPolynomial(std::initializer_list<Coefficient> coeffs);

  static IntPolynomial monomial(Coefficient c, std::size_t degree);
  static IntPolynomial constant(Coefficient c) { return monomial(c, 0); }

  const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend auto operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    return std::lexicographical_compare_three_way(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                                  b.coeffs_.rend());
  }

 private:
  void normalise();
  std::vector<Coefficient> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q);
/// Multiplies by x^k.
IntPolynomial shift(const IntPolynomial& p, std::size_t k);
IntPolynomial scale(const IntPolynomial& p, Coefficient c);

/// Throws ZeroPolynomial for the zero polynomial.
std::size_t degree(const IntPolynomial& p);
/// Least exponent with a non-zero coefficient. Throws ZeroPolynomial.
std::size_t min_support(const IntPolynomial& p);
Coefficient coefficient(const IntPolynomial& p, std::size_t i);
Coefficient evaluate(const IntPolynomial& p, Coefficient t);

/// Descending terms, zero terms omitted: "x^4 + 4x^3", "2x - 1", "0".
std::string to_text(const IntPolynomial& p);

/// {"min_degree": j, "coeffs": [c_j, ..., c_k]}; the zero polynomial is
/// {"min_degree": 0, "coeffs": []}.
nlohmann::ordered_json to_json(const IntPolynomial& p);
/// Throws MalformedPolynomialJson.
IntPolynomial from_json(const nlohmann::ordered_json& j);

/// Exact C(n, k); 0 when k < 0 or k > n. Throws IntegerOverflow.
Coefficient binomial(std::int64_t n, std::int64_t k);

Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

}  // namespace ecpoly
