#include "cyclo/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cyclo {

namespace {

class CyclotomicCache {
 public:
  IntPolynomial get(std::uint64_t d) {
    std::lock_guard lock(mutex_);
    return compute(d);
  }

 private:
  // Caller holds mutex_. Proper divisors are filled in ascending order first.
  const IntPolynomial& compute(std::uint64_t d) {
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    IntPolynomial denom = IntPolynomial::constant(1);
    for (std::uint64_t e : divisors_of(d)) {
      if (e == d) break;
      denom = denom * compute(e);
    }
    auto [q, r] = divrem_monic(IntPolynomial::x_pow_minus_one(d), denom);
    if (!r.is_zero()) {
      throw InvariantViolation("cyclotomic(" + std::to_string(d) + "): nonzero remainder " + to_string(r));
    }
    return cache_.emplace(d, std::move(q)).first->second;
  }

  std::mutex mutex_;
  std::map<std::uint64_t, IntPolynomial> cache_;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

}  // namespace

IntPolynomial cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  return cache().get(d);
}

IntPolynomial cyclotomic_prime_power(std::uint64_t p, unsigned e) {
  if (p < 2) throw std::invalid_argument("cyclotomic_prime_power: p must be prime");
  if (e == 0) throw std::invalid_argument("cyclotomic_prime_power: e must be positive");
  std::uint64_t step = 1;
  for (unsigned i = 1; i < e; ++i) step *= p;
  std::vector<Integer> c((p - 1) * step + 1);
  for (std::uint64_t i = 0; i < p; ++i) c[i * step] = 1;
  return IntPolynomial(std::move(c));
}

std::vector<CyclotomicFactor> all_cyclotomic_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("all_cyclotomic_divisors: n must be positive");
  std::vector<CyclotomicFactor> out;
  for (std::uint64_t d : divisors_of(n)) out.push_back({d, cyclotomic(d)});
  return out;
}

}  // namespace cyclo
