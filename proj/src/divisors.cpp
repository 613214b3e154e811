#include "cyclo/divisors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclo {

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

FactoredInt::FactoredInt(std::uint64_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FactoredInt: n must be positive");
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    factors_.push_back({p, k});
  }
  if (n > 1) factors_.push_back({n, 1});
}

TableauFamily an_partitions(const FactoredInt& n) {
  std::vector<PrimeTableau> fam;
  for (const auto& [p, alpha] : n.factors()) {
    const std::uint64_t cofactor = n.n() / PrimePower{p, alpha}.value();
    std::vector<std::size_t> parts;
    std::uint64_t p_i = 1;  // p^i
    for (unsigned i = 0; i < alpha; ++i) {
      const std::uint64_t mult = euler_phi(p_i) * cofactor;
      parts.insert(parts.end(), mult, alpha - i);
      p_i *= p;
    }
    fam.push_back({Integer(static_cast<unsigned long>(p)), YoungDiagram(std::move(parts))});
  }
  return TableauFamily(n.n(), std::move(fam));
}

std::vector<Integer> an_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("an_divisors: n must be positive");
  if (n == 1) return {Integer(1)};
  return divisors_from_partitions(an_partitions(FactoredInt(n)), n);
}

std::vector<RatioPosition> ratio_positions(const FactoredInt& n) {
  std::vector<RatioPosition> out;
  for (const auto& [p, alpha] : n.factors()) {
    std::uint64_t pt = 1;
    for (unsigned t = 1; t <= alpha; ++t) {
      pt *= p;
      out.push_back({n.n() - n.n() / pt + 1, p});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

std::vector<Integer> consecutive_ratios(const std::vector<Integer>& chain) {
  std::vector<Integer> out;
  out.reserve(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) out.push_back(i == 0 ? chain[0] : exact_div(chain[i], chain[i - 1]));
  return out;
}

DivisorStats divisor_stats(const FactoredInt& n) {
  if (n.n() < 2) throw std::invalid_argument("divisor_stats: n must be at least 2");
  const std::uint64_t m = n.n();
  const auto& f = n.factors();
  const std::uint64_t p1 = f[0].prime;

  // The second-lowest corner across all tableaux sits at row n/p_2 or n/p_1^2,
  // whichever exists and is higher.
  std::uint64_t second_corner = 0;
  if (f.size() >= 2) second_corner = m / f[1].prime;
  if (f[0].exponent >= 2) second_corner = std::max(second_corner, m / (p1 * p1));

  std::uint64_t biggest_pp = 0;
  for (const auto& pp : f) biggest_pp = std::max(biggest_pp, pp.value());

  return DivisorStats{
      .mult_of_one = m - m / p1,
      .least_above_one = p1,
      .mult_least = m / p1 - second_corner,
      .largest = m,
      .mult_largest = m / biggest_pp,
  };
}

Integer gcd_product(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gcd_product: n must be positive");
  Integer acc = 1;
  for (std::uint64_t k = 1; k <= n; ++k) acc *= static_cast<unsigned long>(gcd_u64(k, n));
  return acc;
}

SignedMagnitude det_An(const FactoredInt& n) {
  Integer mag = 1;
  for (const auto& pp : n.factors()) {
    const std::uint64_t pa = pp.value();
    const std::uint64_t exponent = (n.n() / pa) * ((pa - 1) / (pp.prime - 1));
    mag *= pow(Integer(static_cast<unsigned long>(pp.prime)), exponent);
  }
  return {(n.n() - 1) % 2 == 0 ? 1 : -1, mag};
}

std::vector<Integer> coker_structure(std::uint64_t n) {
  std::vector<Integer> out;
  for (auto& e : an_divisors(n))
    if (e > 1) out.push_back(std::move(e));
  return out;
}

DivisorReport divisor_report(std::uint64_t n) {
  const FactoredInt f(n);
  DivisorReport r;
  r.n = n;
  r.divisors = an_divisors(n);
  r.ratios = consecutive_ratios(r.divisors);
  if (n >= 2) {
    r.ratio_positions = ratio_positions(f);
    r.stats = divisor_stats(f);
  }
  for (const auto& e : r.divisors)
    if (e > 1) r.coker_orders.push_back(e);
  const SignedMagnitude det = det_An(f);
  r.det_sign = det.sign;
  r.det_magnitude = det.magnitude;
  r.gcd_product = gcd_product(n);
  return r;
}

}  // namespace cyclo
