#include "cyclo/smithvec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/divisors.hpp"

namespace cyclo {

namespace {

void require_coprime(std::uint64_t a, std::uint64_t b, const char* where) {
  if (a == 0 || b == 0 || gcd_u64(a, b) != 1) {
    throw NotCoprime(std::string(where) + ": gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

IntMatrix SmithVector::coordinate_matrix() const {
  IntMatrix m(n, entries.size());
  for (std::size_t j = 0; j < entries.size(); ++j) m.set_column(j, entries[j].coordinates());
  return m;
}

std::size_t SmithVector::max_bit_length() const {
  std::size_t bits = 0;
  for (const auto& e : entries) bits = std::max(bits, e.max_bit_length());
  return bits;
}

IntMatrix BezoutDiagonals::combined(std::uint64_t m, std::uint64_t n) const {
  const std::size_t k = perm.size();
  IntMatrix out(k, k);
  const Integer mm = static_cast<unsigned long>(m);
  const Integer nn = static_cast<unsigned long>(n);
  for (std::size_t l = 0; l < k; ++l) {
    out(l, l) += nn * d1[l];
    // D2 * P: column l of P is e_{perm[l]}, so row perm[l] picks up d2[perm[l]] at column l.
    out(perm[l], l) += mm * d2[perm[l]];
  }
  return out;
}

DirectSumElement sum_product(std::uint64_t k1, std::uint64_t k2, const DirectSumElement& p, const DirectSumElement& q) {
  require_coprime(k1, k2, "sum_product");
  if (p.n() != k1 || q.n() != k2) throw std::invalid_argument("sum_product: operands do not match (k1, k2)");
  const std::uint64_t n = k1 * k2;
  std::vector<IntPolynomial> comps;
  for (std::uint64_t d : divisors_of(n)) {
    const std::uint64_t d1 = gcd_u64(d, k1);
    const std::uint64_t d2 = d / d1;
    IntPolynomial prod = compose_power(p.component(d1), k2) * compose_power(q.component(d2), k1);
    comps.push_back(rem_monic(prod, cyclotomic(d)));
  }
  return DirectSumElement(n, std::move(comps));
}

IntMatrix w_prime_power(std::uint64_t p, unsigned e) {
  if (p < 2) throw std::invalid_argument("w_prime_power: p must be prime");
  if (e == 0) return IntMatrix::identity(1);
  const IntMatrix a_prev = build_A_prime_power(p, e - 1);
  const IntMatrix w_prev = w_prime_power(p, e - 1);
  const std::size_t b = a_prev.rows();
  IntMatrix w(p * b, p * b);
  const Integer pp = static_cast<unsigned long>(p);
  for (std::size_t blk = 0; blk + 1 < p; ++blk) {
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) w(i, blk * b + j) = a_prev(i, j);
      w((blk + 1) * b + i, blk * b + i) = 1;
    }
  }
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) w(i, (p - 1) * b + j) = pp * w_prev(i, j);
  return w;
}

SmithVector sv_prime_power(std::uint64_t p, unsigned e) {
  const std::uint64_t n = ipow(p, e);
  const IntMatrix w = w_prime_power(p, e);
  // Ascending divisor chain of A_{p^e}: p^i repeated phi(p^(e-i)) times.
  std::vector<Integer> chain;
  chain.reserve(n);
  for (unsigned i = 0; i <= e; ++i) {
    chain.insert(chain.end(), euler_phi(ipow(p, e - i)), pow(Integer(static_cast<unsigned long>(p)), i));
  }
  SmithVector out;
  out.n = n;
  out.divisors = chain;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> col = w.column(j);
    for (auto& x : col) x = exact_div(x, chain[j]);
    out.entries.push_back(DirectSumElement::from_coordinates(n, col));
  }
  return out;
}

std::vector<std::size_t> sigma_perm(std::uint64_t k1, std::uint64_t k2) {
  require_coprime(k1, k2, "sigma_perm");
  std::vector<std::size_t> sigma(k1 * k2);
  for (std::uint64_t i = 0; i < k1; ++i)
    for (std::uint64_t j = 0; j < k2; ++j) sigma[k2 * i + j] = k1 * j + i;
  return sigma;
}

BezoutDiagonals bezout_diagonals(std::uint64_t m, std::uint64_t n, const std::vector<std::size_t>& perm) {
  require_coprime(m, n, "bezout_diagonals");
  const std::size_t k = perm.size();
  BezoutDiagonals out{std::vector<Integer>(k, 1), std::vector<Integer>(k, 1), perm};
  std::vector<bool> seen(k, false);
  const Integer mm = static_cast<unsigned long>(m);
  const Integer nn = static_cast<unsigned long>(n);
  for (std::size_t start = 0; start < k; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t l = start; !seen[l]; l = perm[l]) {
      if (l >= k) throw std::invalid_argument("bezout_diagonals: not a permutation");
      seen[l] = true;
      ++len;
    }
    // det of the cycle block is n^c * a + (-1)^(c-1) * m^c * b.
    const Integer nc = pow(nn, len);
    const Integer mc = pow(mm, len);
    const Bezout eg = ext_gcd(nc, mc);
    if (eg.g != 1) throw BezoutFailure("bezout_diagonals: gcd(n^c, m^c) != 1");
    Integer a;
    mpz_fdiv_r(a.get_mpz_t(), eg.x.get_mpz_t(), mc.get_mpz_t());
    Integer b = exact_div(Integer(1 - nc * a), mc);
    if (len % 2 == 0) b = -b;
    out.d1[start] = a;
    out.d2[start] = b;
  }
  return out;
}

SmithVector tsv(std::uint64_t k1, std::uint64_t k2, const SmithVector& p, const SmithVector& q) {
  require_coprime(k1, k2, "tsv");
  if (p.n != k1 || q.n != k2) throw std::invalid_argument("tsv: Smith vectors do not match (k1, k2)");
  const std::uint64_t n = k1 * k2;

  // P_l for l = k2*i1 + j1.
  std::vector<DirectSumElement> prods;
  prods.reserve(n);
  for (std::uint64_t i1 = 0; i1 < k1; ++i1)
    for (std::uint64_t j1 = 0; j1 < k2; ++j1) prods.push_back(sum_product(k1, k2, p.entries[i1], q.entries[j1]));

  const std::vector<std::size_t> sigma = sigma_perm(k1, k2);
  std::vector<std::size_t> sigma_inv(n);
  for (std::size_t l = 0; l < n; ++l) sigma_inv[sigma[l]] = l;
  const BezoutDiagonals bd = bezout_diagonals(k1, k2, sigma);

  SmithVector out;
  out.n = n;
  const Integer kk1 = static_cast<unsigned long>(k1);
  const Integer kk2 = static_cast<unsigned long>(k2);
  for (std::uint64_t l = 0; l < n; ++l) {
    // Q_l = P at the index whose lexicographic pair is l's reverse-lexicographic pair.
    const DirectSumElement& big_q = prods[sigma_inv[l]];
    out.entries.push_back(Integer(bd.d1[l] * kk2) * prods[l] + Integer(bd.d2[l] * kk1) * big_q);
    const std::uint64_t i1 = l / k2;
    const std::uint64_t j2 = l / k1;
    out.divisors.push_back(p.divisors[i1] * q.divisors[j2]);
  }

  const SmithVectorReport report = verify_smith_vector(out);
  if (!report.passed()) {
    throw VerificationFailure("tsv(" + std::to_string(k1) + ", " + std::to_string(k2) + "): " + report.summary());
  }
  return out;
}

SmithVector sv(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sv: n must be positive");
  const FactoredInt f(n);
  if (f.factors().empty()) return sv_prime_power(2, 0);
  const auto& first = f.factors().front();
  SmithVector acc = sv_prime_power(first.prime, first.exponent);
  std::uint64_t k = first.value();
  for (std::size_t i = 1; i < f.factors().size(); ++i) {
    const auto& pp = f.factors()[i];
    acc = tsv(k, pp.value(), acc, sv_prime_power(pp.prime, pp.exponent));
    k *= pp.value();
  }
  return acc;
}

std::string SmithVectorReport::summary() const {
  if (passed()) return "pass";
  std::ostringstream os;
  os << "fail:";
  if (!unimodular) os << " basis determinant " << determinant.get_str() << " (expected +-1);";
  if (!chain_matches) os << " divisor chain differs from the elementary divisors;";
  if (!order_mismatches.empty()) {
    os << " cokernel order mismatch at entries";
    for (auto j : order_mismatches) os << ' ' << j;
    os << ';';
  }
  return os.str();
}

SmithVectorReport verify_smith_vector(const SmithVector& v) { return verify_smith_vector(v, snf(build_A(v.n))); }

SmithVectorReport verify_smith_vector(const SmithVector& v, const SnfResult& a_snf) {
  SmithVectorReport r;
  if (v.entries.size() != v.n || v.divisors.size() != v.n) {
    r.determinant = 0;
    for (std::size_t j = 0; j < v.entries.size(); ++j) r.order_mismatches.push_back(j);
    return r;
  }
  r.determinant = determinant(v.coordinate_matrix());
  r.unimodular = abs(r.determinant) == 1;
  r.chain_matches = v.divisors == an_divisors(v.n);
  for (std::size_t j = 0; j < v.entries.size(); ++j) {
    r.orders.push_back(cokernel_order(a_snf, v.entries[j].coordinates()));
    if (r.orders.back() != v.divisors[j]) r.order_mismatches.push_back(j);
  }
  return r;
}

}  // namespace cyclo
