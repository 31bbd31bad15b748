#include "ecpoly/polynomial.hpp"

#include <sstream>

#include "ecpoly/error.hpp"

namespace ecpoly {

__extension__ using Wide128 = __int128;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::IntegerOverflow, "coefficient addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::IntegerOverflow, "coefficient multiplication");
  return r;
}

IntPolynomial::IntPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { normalise(); }

IntPolynomial::IntPolynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) { normalise(); }

IntPolynomial IntPolynomial::monomial(Coefficient c, std::size_t degree) {
  std::vector<Coefficient> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalise() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Coefficient> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial subtract(const IntPolynomial& p, const IntPolynomial& q) { return add(p, scale(q, -1)); }

IntPolynomial shift(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero()) return p;
  std::vector<Coefficient> out(k, 0);
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(out));
}

IntPolynomial scale(const IntPolynomial& p, Coefficient c) {
  std::vector<Coefficient> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(p.coeffs()[i], c);
  return IntPolynomial(std::move(out));
}

std::size_t degree(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return p.coeffs().size() - 1;
}

std::size_t min_support(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "support of the zero polynomial");
  std::size_t i = 0;
  while (p.coeffs()[i] == 0) ++i;
  return i;
}

Coefficient coefficient(const IntPolynomial& p, std::size_t i) {
  return i < p.coeffs().size() ? p.coeffs()[i] : 0;
}

Coefficient evaluate(const IntPolynomial& p, Coefficient t) {
  Coefficient acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

std::string to_text(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    Coefficient c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t mag = negative ? std::uint64_t{0} - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

nlohmann::ordered_json to_json(const IntPolynomial& p) {
  nlohmann::ordered_json j;
  if (p.is_zero()) {
    j["min_degree"] = 0;
    j["coeffs"] = nlohmann::ordered_json::array();
    return j;
  }
  const std::size_t low = min_support(p);
  j["min_degree"] = low;
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = low; i < p.coeffs().size(); ++i) arr.push_back(p.coeffs()[i]);
  j["coeffs"] = std::move(arr);
  return j;
}

IntPolynomial from_json(const nlohmann::ordered_json& j) {
  auto fail = [](const std::string& why) -> IntPolynomial {
    throw Error(ErrorKind::MalformedPolynomialJson, why);
  };
  if (!j.is_object()) return fail("expected an object");
  if (!j.contains("min_degree") || !j.contains("coeffs")) return fail("missing min_degree or coeffs");
  const auto& low = j["min_degree"];
  const auto& arr = j["coeffs"];
  if (!low.is_number_integer() || low.get<std::int64_t>() < 0) return fail("min_degree must be a non-negative integer");
  if (!arr.is_array()) return fail("coeffs must be an array");
  const auto offset = low.get<std::size_t>();
  if (offset > (std::size_t{1} << 20)) return fail("min_degree too large");
  std::vector<Coefficient> out(offset, 0);
  for (const auto& c : arr) {
    if (!c.is_number_integer()) return fail("coefficients must be integers");
    if (c.is_number_unsigned() && c.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      return fail("coefficient exceeds 64-bit range");
    }
    out.push_back(c.get<Coefficient>());
  }
  return IntPolynomial(std::move(out));
}

Coefficient binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Coefficient r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i; use 128 bits so the product cannot wrap.
    const Wide128 wide = static_cast<Wide128>(r) * (n - k + i) / i;
    if (wide > INT64_MAX) throw Error(ErrorKind::IntegerOverflow, "binomial coefficient");
    r = static_cast<Coefficient>(wide);
  }
  return r;
}

}  // namespace ecpoly
