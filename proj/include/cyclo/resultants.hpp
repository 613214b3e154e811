#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/crtmap.hpp"

namespace cyclo {

/// Sylvester matrix of (f, g): deg g shifted rows of f's coefficients (highest
/// first), then deg f shifted rows of g's.
IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g);

/// R(f, g) = det of the Sylvester matrix. Throws ZeroPolynomial on a zero argument.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// Closed form for R(Phi_m, Phi_n).
///
/// For m > n the prime-power-ratio case evaluates to p^phi(n); this is the
/// value the Sylvester determinant produces.
Integer cyclotomic_resultant(std::uint64_t m, std::uint64_t n);

/// prod_{i<j} R(f_j, f_i): the determinant of psi_matrix(fs).
Integer det_psi_product(const MonicFactorization& fs);

/// Elementary divisors of the CRT map for Phi_m * Phi_n, and the positive
/// generator of the ideal (Phi_m, Phi_n) intersected with Z.
struct PairCokernel {
  std::vector<Integer> divisors;
  Integer ideal_generator;  ///< p when m/n = p^a after ordering, 1 otherwise
};

/// Throws EqualIndices if m == n.
PairCokernel pair_cokernel_divisors(std::uint64_t m, std::uint64_t n);

}  // namespace cyclo
