#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/crtmap.hpp"
#include "cyclo/snf.hpp"

namespace cyclo {

/**
 * Basis p^(0), ..., p^(n-1) of the codomain of Psi_n paired with the
 * elementary divisors e_n(0) | ... | e_n(n-1) of A_n, such that
 * sum a_j p^(j) lies in the image of Psi_n exactly when e_n(j) | a_j for all j.
 *
 * Entries are ordered so the divisors ascend.
 */
struct SmithVector {
  std::uint64_t n = 1;
  std::vector<DirectSumElement> entries;
  std::vector<Integer> divisors;

  /// n x n matrix whose column j is the coordinate vector of entry j.
  IntMatrix coordinate_matrix() const;
  /// Largest coefficient bit length over every entry.
  std::size_t max_bit_length() const;
};

/// Diagonals D1, D2 and permutation P with det(n*D1 + m*D2*P) = 1.
///
/// P is the permutation matrix sending basis vector l to perm[l], so
/// (D2*P*x)_l = d2[l] * x[perm^-1(l)].
struct BezoutDiagonals {
  std::vector<Integer> d1;
  std::vector<Integer> d2;
  std::vector<std::size_t> perm;

  /// n*D1 + m*D2*P as an explicit matrix.
  IntMatrix combined(std::uint64_t m, std::uint64_t n) const;
};

/// Product of an element over k1 and one over k2 inside the direct sum over
/// k1*k2: at d = d1*d2 (d1 | k1, d2 | k2) the component is
/// p_{d1}(t^k2) * q_{d2}(t^k1) mod Phi_d(t).
DirectSumElement sum_product(std::uint64_t k1, std::uint64_t k2, const DirectSumElement& p, const DirectSumElement& q);

/// W_{p^e} = A_{p^e} V_{p^e} from its block recursion, W_1 = (1).
IntMatrix w_prime_power(std::uint64_t p, unsigned e);

/// Smith vector for p^e: column j of W_{p^e} divided by the j-th elementary divisor.
SmithVector sv_prime_power(std::uint64_t p, unsigned e);

/// sigma(k2*i + j) = k1*j + i for 0 <= i < k1, 0 <= j < k2: carries an index's
/// lexicographic pair to the index with that reverse-lexicographic pair.
std::vector<std::size_t> sigma_perm(std::uint64_t k1, std::uint64_t k2);

/// One Bezout solve per cycle of perm (fixed points included), placed at the
/// cycle's smallest index; every other entry is 1.
BezoutDiagonals bezout_diagonals(std::uint64_t m, std::uint64_t n, const std::vector<std::size_t>& perm);

/// Smith vector for k1*k2 from Smith vectors for coprime k1 and k2. Verifies
/// its own output and throws VerificationFailure if the check fails.
SmithVector tsv(std::uint64_t k1, std::uint64_t k2, const SmithVector& p, const SmithVector& q);

/// Smith vector for n, folding tsv over the prime powers of n in ascending order.
SmithVector sv(std::uint64_t n);

struct SmithVectorReport {
  Integer determinant;           ///< det of the coordinate matrix
  bool unimodular = false;       ///< |determinant| == 1
  bool chain_matches = false;    ///< divisors equal an_divisors(n)
  std::vector<Integer> orders;   ///< cokernel order of each entry
  std::vector<std::size_t> order_mismatches;

  bool passed() const { return unimodular && chain_matches && order_mismatches.empty(); }
  std::string summary() const;
};

/// Checks the basis property, the divisor chain, and that each entry's order
/// in the cokernel of Psi_n equals its paired divisor.
SmithVectorReport verify_smith_vector(const SmithVector& v);
/// As above, reusing a precomputed snf(build_A(v.n)).
SmithVectorReport verify_smith_vector(const SmithVector& v, const SnfResult& a_snf);

}  // namespace cyclo
