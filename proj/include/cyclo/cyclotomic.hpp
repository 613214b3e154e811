#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/intpoly.hpp"

namespace cyclo {

/// The d-th cyclotomic polynomial, d >= 1. Memoized across calls and threads.
///
/// Computed as the exact quotient of X^d - 1 by the product of Phi_e over the
/// proper divisors e of d.
IntPolynomial cyclotomic(std::uint64_t d);

/// Phi_{p^e} = sum_{i<p} X^{i p^{e-1}}, built directly. p is trusted to be prime.
IntPolynomial cyclotomic_prime_power(std::uint64_t p, unsigned e);

struct CyclotomicFactor {
  std::uint64_t d;
  IntPolynomial phi;
};

/// (d, Phi_d) for every divisor d of n, d ascending.
std::vector<CyclotomicFactor> all_cyclotomic_divisors(std::uint64_t n);

}  // namespace cyclo
