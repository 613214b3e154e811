#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclo/intpoly.hpp"
#include "cyclo/matrix.hpp"

namespace cyclo {

/// Element of the direct sum over d | n of Z[X]/Phi_d(X).
///
/// Components are stored in ascending divisor order, each reduced below
/// deg Phi_d. Two elements combine only when their n agree.
class DirectSumElement {
 public:
  /// The zero element.
  explicit DirectSumElement(std::uint64_t n);
  /// Components in ascending divisor order; each is reduced mod Phi_d.
  DirectSumElement(std::uint64_t n, std::vector<IntPolynomial> components);

  /// Element whose standard-basis coordinates are `coords` (blocks by
  /// ascending divisor, constant term first inside each block).
  static DirectSumElement from_coordinates(std::uint64_t n, std::span<const Integer> coords);
  /// Same value in every component.
  static DirectSumElement broadcast(std::uint64_t n, const IntPolynomial& value);

  std::uint64_t n() const noexcept { return n_; }
  const std::vector<std::uint64_t>& divisors() const noexcept { return divisors_; }
  const std::vector<IntPolynomial>& components() const noexcept { return components_; }
  /// Component at divisor d of n.
  const IntPolynomial& component(std::uint64_t d) const;

  /// Flattened coordinate vector of length n.
  std::vector<Integer> coordinates() const;
  /// Largest coefficient bit length over all components.
  std::size_t max_bit_length() const;

  DirectSumElement& operator+=(const DirectSumElement& rhs);
  DirectSumElement& operator*=(const Integer& c);
  friend DirectSumElement operator+(DirectSumElement a, const DirectSumElement& b) { return a += b; }
  friend DirectSumElement operator*(const Integer& c, DirectSumElement a) { return a *= c; }
  friend bool operator==(const DirectSumElement& a, const DirectSumElement& b) {
    return a.n_ == b.n_ && a.components_ == b.components_;
  }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> divisors_;
  std::vector<IntPolynomial> components_;
};

/// Nonempty list of monic factors of degree >= 1, in the order given.
class MonicFactorization {
 public:
  explicit MonicFactorization(std::vector<IntPolynomial> factors);
  const std::vector<IntPolynomial>& factors() const noexcept { return factors_; }
  std::size_t total_degree() const;

 private:
  std::vector<IntPolynomial> factors_;
};

/// The matrix A_n of the CRT map Z[X]/(X^n - 1) -> (+)_{d|n} Z[X]/Phi_d in the
/// standard bases: column j holds X^j mod Phi_d for each d ascending.
IntMatrix build_A(std::uint64_t n);

/// A_{p^e} assembled from the p x p block layout over A_{p^{e-1}}.
IntMatrix build_A_prime_power(std::uint64_t p, unsigned e);

/// Matrix of Z[X]/(prod f_i) -> (+)_i Z[X]/f_i in the standard bases.
IntMatrix psi_matrix(const MonicFactorization& fs);

/// h mod (X^n - 1), then reduced into every Phi_d component.
DirectSumElement apply_psi(std::uint64_t n, const IntPolynomial& h);

/// pi[i*n + j] = (n*i + m*j) mod mn. Throws NotCoprime unless gcd(m, n) = 1.
std::vector<std::size_t> crt_permutation(std::uint64_t m, std::uint64_t n);

}  // namespace cyclo
