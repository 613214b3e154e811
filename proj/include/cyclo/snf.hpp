#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

/// U * A * V = S with U, V unimodular and S diagonal, nonnegative, and
/// e_1 | e_2 | ... along the diagonal (zeros last).
struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::vector<Integer> divisors() const { return S.diagonal_entries(); }
};

/// Smith normal form by gcd-pivoting elimination, tracking U and V.
///
/// The pivot is the entry of least nonzero absolute value in the active
/// submatrix, ties going to the lowest (row, col). Output is deterministic.
SnfResult snf(const IntMatrix& a);

/// Weakly decreasing sequence of nonnegative parts. Trailing zeros are kept as
/// given but ignored by comparison.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  /// i-th part, 0 past the end.
  std::size_t part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t nonzero_parts() const noexcept;
  std::size_t boxes() const noexcept;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b);

 private:
  std::vector<std::size_t> parts_;
};

struct PrimeTableau {
  Integer prime;
  YoungDiagram diagram;
  friend bool operator==(const PrimeTableau&, const PrimeTableau&) = default;
};

/// One Young diagram per prime, primes strictly increasing, for a diagonal of
/// length n.
class TableauFamily {
 public:
  TableauFamily(std::size_t n, std::vector<PrimeTableau> entries);

  std::size_t n() const noexcept { return n_; }
  const std::vector<PrimeTableau>& entries() const noexcept { return entries_; }
  /// Diagram for p, or nullptr if p does not occur.
  const YoungDiagram* find(const Integer& p) const;

  friend bool operator==(const TableauFamily&, const TableauFamily&) = default;

 private:
  std::size_t n_;
  std::vector<PrimeTableau> entries_;
};

/// For each prime dividing some entry, the p-adic valuations of the entries
/// sorted weakly decreasing. Throws ZeroEntry if an entry is 0.
TableauFamily partitions_of_diagonal(std::span<const Integer> entries);

/// e_k = prod_p p^{lambda_p[n-k]} for k = 1..n (ascending chain).
std::vector<Integer> divisors_from_partitions(const TableauFamily& family, std::size_t n);

/// Smith form diagonal of diag(entries) via the tableau construction; zeros
/// are stripped first and re-appended at the end.
std::vector<Integer> snf_diagonal(std::span<const Integer> entries);

/// Least a > 0 with a*v in the column span of A, where r = snf(A) and A is
/// square and nonsingular. Throws Singular if S has a zero on its diagonal.
Integer cokernel_order(const SnfResult& r, std::span<const Integer> v);

/// Trial-division factorisation of |a| > 0 into (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& a);

}  // namespace cyclo
