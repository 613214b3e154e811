#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclo/snf.hpp"

namespace cyclo {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n together with its factorisation, primes ascending.
class FactoredInt {
 public:
  explicit FactoredInt(std::uint64_t n);

  std::uint64_t n() const noexcept { return n_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

/// Young diagram per prime of n for the elementary divisors of A_n: the part
/// alpha - i repeated phi(p^i) * n / p^alpha times, i = 0..alpha-1.
TableauFamily an_partitions(const FactoredInt& n);

/// Elementary divisors of A_n, ascending, from the closed form.
std::vector<Integer> an_divisors(std::uint64_t n);

struct RatioPosition {
  std::uint64_t index;  ///< 1-based position j with e_j / e_{j-1} = prime
  std::uint64_t prime;
  friend bool operator==(const RatioPosition&, const RatioPosition&) = default;
};

/// Positions n - n/p^t + 1 (t = 1..alpha) carrying ratio p, sorted by index.
std::vector<RatioPosition> ratio_positions(const FactoredInt& n);

/// (e_1, e_2/e_1, ..., e_n/e_{n-1}) for an ascending chain.
std::vector<Integer> consecutive_ratios(const std::vector<Integer>& chain);

struct DivisorStats {
  std::uint64_t mult_of_one;
  std::uint64_t least_above_one;
  std::uint64_t mult_least;
  std::uint64_t largest;
  std::uint64_t mult_largest;
  friend bool operator==(const DivisorStats&, const DivisorStats&) = default;
};

/// Multiplicity of 1, least divisor > 1 with multiplicity, largest with multiplicity. n >= 2.
DivisorStats divisor_stats(const FactoredInt& n);

/// prod_{k=1..n} gcd(k, n).
Integer gcd_product(std::uint64_t n);

struct SignedMagnitude {
  int sign;  ///< +1 or -1
  Integer magnitude;
  Integer value() const { return sign < 0 ? Integer(-magnitude) : magnitude; }
  friend bool operator==(const SignedMagnitude&, const SignedMagnitude&) = default;
};

/// det A_n = (-1)^(n-1) prod p^(n (1 - p^-alpha) / (p - 1)).
SignedMagnitude det_An(const FactoredInt& n);

/// Invariant factors of the cokernel of A_n: the elementary divisors > 1.
std::vector<Integer> coker_structure(std::uint64_t n);

/// Everything the closed forms say about A_n, gathered for reporting.
struct DivisorReport {
  std::uint64_t n;
  std::vector<Integer> divisors;
  std::vector<Integer> ratios;
  std::vector<RatioPosition> ratio_positions;
  std::vector<Integer> coker_orders;
  std::optional<DivisorStats> stats;  ///< absent for n = 1
  int det_sign;
  Integer det_magnitude;
  Integer gcd_product;
  friend bool operator==(const DivisorReport&, const DivisorReport&) = default;
};

DivisorReport divisor_report(std::uint64_t n);

}  // namespace cyclo
