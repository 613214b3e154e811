#include "cyclo/resultants.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("sylvester_matrix: zero polynomial");
  const std::size_t df = *f.degree();
  const std::size_t dg = *g.degree();
  const std::size_t size = df + dg;
  IntMatrix s(size, size);
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) s(r, r + k) = f.coeff(df - k);
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) s(dg + r, r + k) = g.coeff(dg - k);
  return s;
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) { return determinant(sylvester_matrix(f, g)); }

Integer cyclotomic_resultant(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("cyclotomic_resultant: indices must be positive");
  if (m == n) return 0;
  if (m < n) {
    const bool odd = (euler_phi(m) * euler_phi(n)) % 2 == 1;
    Integer r = cyclotomic_resultant(n, m);
    return odd ? Integer(-r) : r;
  }
  const int sign_m = euler_phi(m) % 2 == 0 ? 1 : -1;
  if (n == 1) {
    const std::uint64_t p = prime_power_base(m);
    return p != 0 ? Integer(sign_m * static_cast<long>(p)) : Integer(sign_m);
  }
  if (gcd_u64(m, n) == 1) return 1;
  if (m % n == 0) {
    if (const std::uint64_t p = prime_power_base(m / n); p != 0) {
      return pow(Integer(static_cast<unsigned long>(p)), euler_phi(n));
    }
  }
  return 1;
}

Integer det_psi_product(const MonicFactorization& fs) {
  const auto& f = fs.factors();
  Integer acc = 1;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) acc *= resultant(f[j], f[i]);
  return acc;
}

PairCokernel pair_cokernel_divisors(std::uint64_t m, std::uint64_t n) {
  if (m == n) throw EqualIndices("pair_cokernel_divisors: indices must differ");
  if (m < n) std::swap(m, n);
  const std::size_t length = euler_phi(m) + euler_phi(n);
  PairCokernel out{std::vector<Integer>(length, 1), 1};
  if (m % n != 0) return out;
  const std::uint64_t p = prime_power_base(m / n);
  if (p == 0) return out;
  // |R(Phi_m, Phi_n)| = p^k; all divisors divide p, so the last k equal p.
  const std::size_t k = euler_phi(n);
  for (std::size_t i = length - k; i < length; ++i) out.divisors[i] = static_cast<unsigned long>(p);
  out.ideal_generator = static_cast<unsigned long>(p);
  return out;
}

}  // namespace cyclo
