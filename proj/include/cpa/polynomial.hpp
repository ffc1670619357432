#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cpa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, coefficient i multiplies x^i. The coefficient
/// vector never carries trailing zeros, so the zero polynomial is empty.
template <class Coeff>
class DensePolynomial {
 public:
  DensePolynomial() = default;
  DensePolynomial(std::initializer_list<Coeff> c) : c_(c) { trim(); }
  explicit DensePolynomial(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }

  static DensePolynomial constant(Coeff a) { return DensePolynomial(std::vector<Coeff>{std::move(a)}); }
  static DensePolynomial monomial(std::size_t degree, Coeff a = Coeff(1)) {
    std::vector<Coeff> c(degree + 1);
    c[degree] = std::move(a);
    return DensePolynomial(std::move(c));
  }
  /// x + a
  static DensePolynomial linear(Coeff a) { return DensePolynomial(std::vector<Coeff>{std::move(a), Coeff(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::span<const Coeff> coefficients() const noexcept { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePolynomial& operator*=(const DensePolynomial& o) { return *this = *this * o; }
  DensePolynomial& operator*=(const Coeff& k) {
    if (k == 0) {
      c_.clear();
    } else {
      for (auto& x : c_) x *= k;
    }
    return *this;
  }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
  friend DensePolynomial operator-(DensePolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend DensePolynomial operator*(DensePolynomial a, const Coeff& k) { return a *= k; }
  friend DensePolynomial operator*(const Coeff& k, DensePolynomial a) { return a *= k; }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePolynomial(std::move(out));
  }
  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

  DensePolynomial pow(std::size_t e) const {
    DensePolynomial result = constant(Coeff(1)), base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Horner evaluation; T must absorb Coeff (e.g. BigInt into Rational).
  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// Exact division by (x - r). Returns the quotient and the remainder p(r).
  std::pair<DensePolynomial, Coeff> divide_by_root(const Coeff& r) const {
    if (c_.empty()) return {DensePolynomial{}, Coeff(0)};
    std::vector<Coeff> q(c_.size() - 1);
    Coeff carry(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      carry = carry * r + c_[i];
      if (i > 0) q[i - 1] = carry;
    }
    return {DensePolynomial(std::move(q)), carry};
  }

  /// Human-readable form, highest degree first, e.g. "q^2 - 2*q + 1".
  std::string to_string(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Coeff& a = c_[i];
      if (a == 0) continue;
      const bool negative = a < 0;
      Coeff mag = negative ? Coeff(-a) : a;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = mag == 1;
      if (!unit || i == 0) out += mag.str();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = DensePolynomial<BigInt>;
using RationalPolynomial = DensePolynomial<Rational>;

RationalPolynomial to_rational(const IntPolynomial& p);

/// E-polynomial restricted to the diagonal s = uv.
class DiagonalEPolynomial {
 public:
  DiagonalEPolynomial() = default;
  explicit DiagonalEPolynomial(IntPolynomial in_s) : poly_(std::move(in_s)) {}

  const IntPolynomial& poly() const noexcept { return poly_; }
  /// Reads the s-polynomial back as a chromatic polynomial in q.
  const IntPolynomial& as_chromatic() const noexcept { return poly_; }

  friend DiagonalEPolynomial operator-(const DiagonalEPolynomial& a, const DiagonalEPolynomial& b) {
    return DiagonalEPolynomial(a.poly_ - b.poly_);
  }
  friend bool operator==(const DiagonalEPolynomial&, const DiagonalEPolynomial&) = default;

 private:
  IntPolynomial poly_;
};

using BettiVector = std::vector<BigInt>;

/// P(t) = (-t)^n chi(-1/t). Throws InvariantError if deg(chi) > n or any
/// output coefficient is negative.
IntPolynomial chromatic_to_poincare(const IntPolynomial& chi, std::size_t n);
/// Inverse map: chi(q) = (-q)^n P(-1/q).
IntPolynomial poincare_to_chromatic(const IntPolynomial& p, std::size_t n);
/// E(M(H); u, v) = chi_H(uv).
DiagonalEPolynomial chromatic_to_e(const IntPolynomial& chi);
/// b_k = [t^k] P, padded with zeros to length n + 1.
BettiVector betti_vector(const IntPolynomial& poincare, std::size_t n);

/// Unique interpolant through the points (distinct x). Throws InvariantError
/// if a coefficient is not an integer.
IntPolynomial lagrange_interpolate(std::span<const std::pair<BigInt, BigInt>> points);

/// x (x - 1) ... (x - k + 1)
IntPolynomial falling_factorial(std::size_t k);

/// JSON array of decimal coefficient strings, lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const RationalPolynomial& p);
IntPolynomial int_polynomial_from_json(const nlohmann::json& j);

}  // namespace cpa
