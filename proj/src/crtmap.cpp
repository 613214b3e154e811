#include "cyclo/crtmap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

namespace {

std::size_t index_of_divisor(const std::vector<std::uint64_t>& divisors, std::uint64_t d) {
  auto it = std::lower_bound(divisors.begin(), divisors.end(), d);
  if (it == divisors.end() || *it != d) throw std::invalid_argument(std::to_string(d) + " is not a listed divisor");
  return static_cast<std::size_t>(it - divisors.begin());
}

// Coefficient rows of X^0, X^1, ..., X^(count-1) modulo monic f, each of
// length deg f, obtained by repeated multiplication by X.
std::vector<std::vector<Integer>> power_residues(const IntPolynomial& f, std::size_t count) {
  const std::size_t deg = *f.degree();
  if (deg == 0) throw std::invalid_argument("power_residues: factor of degree 0");
  std::vector<std::vector<Integer>> out;
  out.reserve(count);
  if (count == 0) return out;
  std::vector<Integer> r(deg);
  r[0] = 1;
  out.push_back(r);
  const auto& fc = f.coeffs();
  for (std::size_t j = 1; j < count; ++j) {
    Integer top = r[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < deg; ++i) mpz_submul(r[i].get_mpz_t(), top.get_mpz_t(), fc[i].get_mpz_t());
    }
    out.push_back(r);
  }
  return out;
}

IntMatrix stack_residues(const std::vector<IntPolynomial>& moduli, std::size_t size) {
  IntMatrix a(size, size);
  std::size_t row0 = 0;
  for (const auto& f : moduli) {
    auto cols = power_residues(f, size);
    const std::size_t deg = *f.degree();
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t i = 0; i < deg; ++i) a(row0 + i, j) = std::move(cols[j][i]);
    row0 += deg;
  }
  return a;
}

}  // namespace

DirectSumElement::DirectSumElement(std::uint64_t n) : n_(n), divisors_(divisors_of(n)) {
  if (n == 0) throw std::invalid_argument("DirectSumElement: n must be positive");
  components_.resize(divisors_.size());
}

DirectSumElement::DirectSumElement(std::uint64_t n, std::vector<IntPolynomial> components)
    : n_(n), divisors_(divisors_of(n)), components_(std::move(components)) {
  if (n == 0) throw std::invalid_argument("DirectSumElement: n must be positive");
  if (components_.size() != divisors_.size()) {
    throw std::invalid_argument("DirectSumElement: expected " + std::to_string(divisors_.size()) + " components for n=" +
                                std::to_string(n));
  }
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    const IntPolynomial phi = cyclotomic(divisors_[k]);
    if (components_[k].degree() >= phi.degree()) components_[k] = rem_monic(components_[k], phi);
  }
}

DirectSumElement DirectSumElement::from_coordinates(std::uint64_t n, std::span<const Integer> coords) {
  if (coords.size() != n) throw std::invalid_argument("from_coordinates: expected " + std::to_string(n) + " coordinates");
  std::vector<IntPolynomial> comps;
  std::size_t offset = 0;
  for (std::uint64_t d : divisors_of(n)) {
    const std::size_t len = euler_phi(d);
    comps.emplace_back(std::vector<Integer>(coords.begin() + offset, coords.begin() + offset + len));
    offset += len;
  }
  return DirectSumElement(n, std::move(comps));
}

DirectSumElement DirectSumElement::broadcast(std::uint64_t n, const IntPolynomial& value) {
  return DirectSumElement(n, std::vector<IntPolynomial>(divisors_of(n).size(), value));
}

const IntPolynomial& DirectSumElement::component(std::uint64_t d) const {
  return components_[index_of_divisor(divisors_, d)];
}

std::vector<Integer> DirectSumElement::coordinates() const {
  std::vector<Integer> out;
  out.reserve(n_);
  for (std::size_t k = 0; k < divisors_.size(); ++k) {
    const std::size_t len = euler_phi(divisors_[k]);
    for (std::size_t i = 0; i < len; ++i) out.push_back(components_[k].coeff(i));
  }
  return out;
}

std::size_t DirectSumElement::max_bit_length() const {
  std::size_t bits = 0;
  for (const auto& c : components_) bits = std::max(bits, bit_length(height(c)));
  return bits;
}

DirectSumElement& DirectSumElement::operator+=(const DirectSumElement& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("DirectSumElement: mismatched n");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += rhs.components_[k];
  return *this;
}

DirectSumElement& DirectSumElement::operator*=(const Integer& c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

MonicFactorization::MonicFactorization(std::vector<IntPolynomial> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("MonicFactorization: no factors");
  for (const auto& f : factors_) {
    if (!f.is_monic()) throw NotMonic("factor " + to_string(f) + " is not monic");
    if (f.degree() < Degree{1}) throw std::invalid_argument("factor " + to_string(f) + " has degree 0");
  }
}

std::size_t MonicFactorization::total_degree() const {
  std::size_t total = 0;
  for (const auto& f : factors_) total += *f.degree();
  return total;
}

IntMatrix build_A(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("build_A: n must be positive");
  std::vector<IntPolynomial> moduli;
  for (auto& [d, phi] : all_cyclotomic_divisors(n)) moduli.push_back(std::move(phi));
  return stack_residues(moduli, n);
}

IntMatrix build_A_prime_power(std::uint64_t p, unsigned e) {
  if (p < 2) throw std::invalid_argument("build_A_prime_power: p must be prime");
  if (e == 0) return IntMatrix::identity(1);
  const IntMatrix prev = build_A_prime_power(p, e - 1);
  const std::size_t b = prev.rows();
  IntMatrix a(p * b, p * b);
  for (std::size_t blk = 0; blk < p; ++blk)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) a(i, blk * b + j) = prev(i, j);
  // Block row r (1..p-1): identity in block column r-1, -I in the last block column.
  for (std::size_t r = 1; r < p; ++r) {
    for (std::size_t i = 0; i < b; ++i) {
      a(r * b + i, (r - 1) * b + i) += 1;
      a(r * b + i, (p - 1) * b + i) -= 1;
    }
  }
  return a;
}

IntMatrix psi_matrix(const MonicFactorization& fs) { return stack_residues(fs.factors(), fs.total_degree()); }

DirectSumElement apply_psi(std::uint64_t n, const IntPolynomial& h) {
  if (n == 0) throw std::invalid_argument("apply_psi: n must be positive");
  std::vector<Integer> folded(n);
  const auto& c = h.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) folded[i % n] += c[i];
  const IntPolynomial reduced(std::move(folded));
  std::vector<IntPolynomial> comps;
  for (const auto& [d, phi] : all_cyclotomic_divisors(n)) comps.push_back(rem_monic(reduced, phi));
  return DirectSumElement(n, std::move(comps));
}

std::vector<std::size_t> crt_permutation(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0 || gcd_u64(m, n) != 1) {
    throw NotCoprime("crt_permutation: gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
  }
  std::vector<std::size_t> pi(m * n);
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < n; ++j) pi[i * n + j] = (n * i + m * j) % (m * n);
  return pi;
}

}  // namespace cyclo
