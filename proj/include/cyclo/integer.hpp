#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

/// Arbitrary-precision signed integer used for every coefficient and matrix entry.
using Integer = mpz_class;

// Error types. Each names the violated precondition; callers catch by type.
struct NotMonic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotCoprime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroEntry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroPolynomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EqualIndices : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct Singular : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BezoutFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// An arithmetic identity that must hold did not; indicates a bug, not bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline Integer abs(const Integer& a) {
  Integer r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool divides(const Integer& d, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient of an exact division; throws if d does not divide a.
inline Integer exact_div(const Integer& a, const Integer& d) {
  if (!divides(d, a)) throw InvariantViolation("exact_div: " + d.get_str() + " does not divide " + a.get_str());
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

/// Number of bits of |a|; 0 for a = 0.
inline std::size_t bit_length(const Integer& a) {
  return sgn(a) == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline std::string to_string(const Integer& a) { return a.get_str(10); }

/// Parses an optionally signed decimal integer; rejects anything else.
inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw ParseError("expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected an integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// Result of the extended Euclidean algorithm: g = a*x + b*y.
struct Bezout {
  Integer g, x, y;
};

inline Bezout ext_gcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Small-integer number theory on machine words. Arguments are desk-scale.

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Positive divisors of n in strictly ascending order.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);
/// If n = p^k with p prime and k >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace cyclo
