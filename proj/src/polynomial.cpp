#include "cpa/polynomial.hpp"

#include <stdexcept>

#include "cpa/error.hpp"

namespace cpa {

RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.emplace_back(a);
  return RationalPolynomial(std::move(c));
}

IntPolynomial chromatic_to_poincare(const IntPolynomial& chi, std::size_t n) {
  if (chi.degree() > static_cast<long>(n)) {
    throw InvariantError("chromatic polynomial degree exceeds the vertex count");
  }
  // chi = sum c_i q^i  ->  P = sum c_i (-1)^(n-i) t^(n-i)
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i < chi.coefficients().size(); ++i) {
    BigInt c = chi.coefficients()[i];
    if ((n - i) % 2 == 1) c = -c;
    if (c < 0) {
      throw InvariantError("negative Poincaré coefficient at t^" + std::to_string(n - i) +
                           "; input is not a chromatic polynomial");
    }
    out[n - i] = std::move(c);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poincare_to_chromatic(const IntPolynomial& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n)) throw std::invalid_argument("Poincaré degree exceeds n");
  std::vector<BigInt> out(n + 1);
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    BigInt c = p.coefficients()[k];
    if (k % 2 == 1) c = -c;
    out[n - k] = std::move(c);
  }
  return IntPolynomial(std::move(out));
}

DiagonalEPolynomial chromatic_to_e(const IntPolynomial& chi) { return DiagonalEPolynomial(chi); }

BettiVector betti_vector(const IntPolynomial& poincare, std::size_t n) {
  if (poincare.degree() > static_cast<long>(n)) throw std::invalid_argument("Poincaré degree exceeds n");
  BettiVector b(n + 1);
  for (std::size_t k = 0; k < poincare.coefficients().size(); ++k) {
    if (poincare.coefficients()[k] < 0) {
      throw InvariantError("negative Betti number at degree " + std::to_string(k));
    }
    b[k] = poincare.coefficients()[k];
  }
  return b;
}

IntPolynomial lagrange_interpolate(std::span<const std::pair<BigInt, BigInt>> points) {
  if (points.empty()) return {};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = i + 1; k < points.size(); ++k) {
      if (points[i].first == points[k].first) throw std::invalid_argument("interpolation nodes repeat");
    }
  }
  // Newton divided differences, then expand the Newton form.
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
      if (i == level) break;
    }
  }
  RationalPolynomial result = RationalPolynomial::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result *= RationalPolynomial::linear(Rational(-points[i].first));
    result += RationalPolynomial::constant(dd[i]);
  }
  std::vector<BigInt> out;
  out.reserve(result.coefficients().size());
  for (std::size_t i = 0; i < result.coefficients().size(); ++i) {
    const Rational& c = result.coefficients()[i];
    if (boost::multiprecision::denominator(c) != 1) {
      throw InvariantError("interpolant has non-integer coefficient " + c.str() + " at degree " +
                           std::to_string(i));
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial falling_factorial(std::size_t k) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i) p *= IntPolynomial::linear(-BigInt(i));
  return p;
}

nlohmann::json to_json(const IntPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

nlohmann::json to_json(const RationalPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& item : j) {
    if (!item.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    c.emplace_back(item.get<std::string>().c_str());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace cpa
