#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/integer.hpp"

namespace cyclo {

/// Degree of a polynomial. std::nullopt stands for the degree of the zero
/// polynomial (minus infinity); std::optional's ordering already places it
/// below every finite degree.
using Degree = std::optional<std::size_t>;

/**
 * Dense polynomial in Z[X]. coeffs()[i] is the coefficient of X^i.
 *
 * Always canonical: the highest stored coefficient is nonzero, and the zero
 * polynomial has no coefficients at all.
 */
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  /// c * X^k
  static IntPolynomial monomial(std::size_t k, const Integer& c = 1);
  /// X^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept;
  /// Coefficient of X^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Integer leading() const;
  bool is_monic() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);

struct DivRem {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// a = b*q + r with deg r < deg b. Throws NotMonic unless b has leading coefficient 1.
DivRem divrem_monic(const IntPolynomial& a, const IntPolynomial& b);

/// Remainder of a modulo monic b.
IntPolynomial rem_monic(const IntPolynomial& a, const IntPolynomial& b);

/// Horner evaluation.
Integer eval(const IntPolynomial& a, const Integer& x);

/// a(X^k), k >= 1.
IntPolynomial compose_power(const IntPolynomial& a, std::size_t k);

/// max |a_i|, 0 for the zero polynomial.
Integer height(const IntPolynomial& a);

/// Renders "c_k*X^k + ... + c_1*X + c_0", highest degree first, every
/// coefficient written out and signs explicit between terms. Zero is "0".
std::string to_string(const IntPolynomial& a);

/// Parses the rendering of to_string. Also accepts implicit unit coefficients
/// ("X^2 - X + 1"), repeated degrees (summed), and arbitrary whitespace.
IntPolynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& a);

}  // namespace cyclo
