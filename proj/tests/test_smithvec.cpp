#include <doctest.h>

#include <random>

#include "convert.hpp"
#include "cyclo/crtmap.hpp"
#include "cyclo/divisors.hpp"
#include "cyclo/smithvec.hpp"
#include "cyclo/snf.hpp"

using namespace cyclo;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

DirectSumElement elem(std::uint64_t n, std::vector<IntPolynomial> comps) { return DirectSumElement(n, std::move(comps)); }

}  // namespace

TEST_CASE("sum_product") {
  const auto ones2 = DirectSumElement::broadcast(2, {1});
  const auto ones3 = DirectSumElement::broadcast(3, {1});
  CHECK(sum_product(2, 3, ones2, ones3) == DirectSumElement::broadcast(6, {1}));

  const auto p = elem(2, {{1}, {}});
  const auto q = elem(3, {{1}, {}});
  CHECK(sum_product(2, 3, p, q) == elem(6, {{1}, {}, {}, {}}));

  const auto t3 = elem(3, {{1}, {0, 1}});
  const auto r = sum_product(2, 3, ones2, t3);
  CHECK(r.component(6) == IntPolynomial{-1, 1});

  CHECK_THROWS_AS(sum_product(2, 4, ones2, DirectSumElement::broadcast(4, {1})), NotCoprime);
  CHECK_THROWS_AS(sum_product(3, 2, ones2, ones3), std::invalid_argument);
}

TEST_CASE("sum_product is a ring map on components") {
  // Psi_{k1 k2}(h1(X^k2) h2(X^k1)) = sum_product(Psi_k1 h1, Psi_k2 h2).
  std::mt19937_64 rng(3);
  for (auto [k1, k2] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {3, 4}, {4, 5}, {5, 6}}) {
    for (int t = 0; t < 10; ++t) {
      const IntPolynomial h1 = testutil::from_oracle(oracle::random_poly(rng, k1 - 1, -4, 4, false));
      const IntPolynomial h2 = testutil::from_oracle(oracle::random_poly(rng, k2 - 1, -4, 4, false));
      const auto lhs = apply_psi(k1 * k2, compose_power(h1, k2) * compose_power(h2, k1));
      CHECK(lhs == sum_product(k1, k2, apply_psi(k1, h1), apply_psi(k2, h2)));
    }
  }
}

TEST_CASE("w_prime_power") {
  CHECK(w_prime_power(2, 0) == IntMatrix{{1}});
  CHECK(w_prime_power(2, 1) == IntMatrix{{1, 2}, {1, 0}});
  CHECK(w_prime_power(3, 1) == IntMatrix{{1, 1, 3}, {1, 0, 0}, {0, 1, 0}});
  // W = A V for some unimodular V.
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const IntMatrix w = w_prime_power(p, e);
    const IntMatrix a = build_A_prime_power(p, e);
    CHECK(abs(determinant(w)) == abs(determinant(a)));
    const SnfResult r = snf(a);
    for (std::size_t j = 0; j < w.cols(); ++j) CHECK(cokernel_order(r, w.column(j)) == 1);
  }
}

TEST_CASE("sv_prime_power examples") {
  const SmithVector s2 = sv_prime_power(2, 1);
  CHECK(s2.divisors == ints({1, 2}));
  CHECK(s2.entries[0] == elem(2, {{1}, {1}}));
  CHECK(s2.entries[1] == elem(2, {{1}, {}}));

  const SmithVector s3 = sv_prime_power(3, 1);
  CHECK(s3.divisors == ints({1, 1, 3}));
  CHECK(s3.entries[0] == elem(3, {{1}, {1}}));
  CHECK(s3.entries[1] == elem(3, {{1}, {0, 1}}));
  CHECK(s3.entries[2] == elem(3, {{1}, {}}));

  const SmithVector s1 = sv_prime_power(5, 0);
  CHECK(s1.n == 1);
  CHECK(s1.divisors == ints({1}));
  CHECK(s1.entries[0] == elem(1, {{1}}));
}

TEST_CASE("sv_prime_power is a Smith vector with coefficients in {-1, 0, 1}") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    std::uint64_t q = p;
    for (unsigned e = 1; q <= 27; ++e, q *= p) {
      CAPTURE(q);
      const SmithVector s = sv_prime_power(p, e);
      CHECK(verify_smith_vector(s).passed());
      for (const auto& entry : s.entries)
        for (const auto& c : entry.coordinates()) CHECK(abs(c) <= 1);
    }
  }
}

TEST_CASE("sigma_perm") {
  const auto s = sigma_perm(2, 3);
  CHECK(s == std::vector<std::size_t>{0, 2, 4, 1, 3, 5});
  // One 4-cycle 1 -> 2 -> 4 -> 3 -> 1 and fixed points 0, 5.
  CHECK(s[1] == 2);
  CHECK(s[2] == 4);
  CHECK(s[4] == 3);
  CHECK(s[3] == 1);
  CHECK(sigma_perm(1, 5) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(sigma_perm(2, 2), NotCoprime);
}

TEST_CASE("bezout_diagonals") {
  const auto sigma = sigma_perm(2, 3);
  const BezoutDiagonals bd = bezout_diagonals(2, 3, sigma);
  // 4-cycle at index 1: 81 a - 16 b = 1.
  CHECK(bd.d1[1] == 1);
  CHECK(bd.d2[1] == 5);
  CHECK(determinant(bd.combined(2, 3)) == 1);

  const std::vector<std::size_t> id{0, 1, 2};
  const BezoutDiagonals bi = bezout_diagonals(2, 3, id);
  CHECK(determinant(bi.combined(2, 3)) == 1);

  for (std::uint64_t m = 1; m <= 12; ++m)
    for (std::uint64_t n = 1; n <= 12; ++n) {
      if (gcd_u64(m, n) != 1) continue;
      const auto perm = sigma_perm(m, n);
      const BezoutDiagonals b = bezout_diagonals(m, n, perm);
      CHECK(determinant(b.combined(m, n)) == 1);
      Integer p1 = 1, p2 = 1;
      for (const auto& x : b.d1) p1 *= x;
      for (const auto& x : b.d2) p2 *= x;
      CHECK(gcd(p1, Integer(static_cast<unsigned long>(m))) == 1);
      CHECK(gcd(p2, Integer(static_cast<unsigned long>(n))) == 1);
    }
  CHECK_THROWS_AS(bezout_diagonals(2, 4, id), NotCoprime);
}

TEST_CASE("tsv") {
  const SmithVector s6 = tsv(2, 3, sv_prime_power(2, 1), sv_prime_power(3, 1));
  CHECK(s6.divisors == ints({1, 1, 1, 2, 6, 6}));
  CHECK(verify_smith_vector(s6).passed());
  CHECK(s6.entries == sv(6).entries);

  const SmithVector q = sv_prime_power(5, 1);
  const SmithVector t = tsv(1, 5, sv_prime_power(2, 0), q);
  CHECK(t.divisors == q.divisors);
  CHECK(t.entries == q.entries);

  CHECK_THROWS_AS(tsv(2, 4, sv_prime_power(2, 1), sv_prime_power(2, 2)), NotCoprime);
  CHECK_THROWS_AS(tsv(3, 2, sv_prime_power(2, 1), sv_prime_power(3, 1)), std::invalid_argument);
}

TEST_CASE("sv") {
  CHECK(sv(8).entries == sv_prime_power(2, 3).entries);
  CHECK(sv(1).entries.size() == 1);
  const SmithVector s12 = sv(12);
  CHECK(s12.divisors == ints({1, 1, 1, 1, 1, 1, 2, 2, 6, 12, 12, 12}));
  CHECK(verify_smith_vector(s12).passed());
  CHECK_THROWS_AS(sv(0), std::invalid_argument);
}

TEST_CASE("scaled Smith vectors span the image") {
  for (std::uint64_t n : {6, 10, 12, 15, 18}) {
    const SmithVector s = sv(n);
    IntMatrix m = s.coordinate_matrix();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) *= s.divisors[j];
    CHECK(abs(determinant(m)) == abs(determinant(build_A(n))));
  }
}

TEST_CASE("verify_smith_vector catches broken inputs") {
  const SmithVector good = sv(6);
  CHECK(verify_smith_vector(good).passed());
  CHECK(verify_smith_vector(good).summary() == "pass");

  SmithVector doubled = good;
  doubled.entries[0] = Integer(2) * doubled.entries[0];
  const SmithVectorReport r1 = verify_smith_vector(doubled);
  CHECK_FALSE(r1.passed());
  CHECK_FALSE(r1.unimodular);
  CHECK(abs(r1.determinant) == 2);

  SmithVector swapped = good;
  std::swap(swapped.entries[0], swapped.entries[5]);
  const SmithVectorReport r2 = verify_smith_vector(swapped);
  CHECK_FALSE(r2.passed());
  CHECK(r2.unimodular);
  CHECK(r2.chain_matches);
  CHECK_FALSE(r2.order_mismatches.empty());

  SmithVector chain = good;
  chain.divisors[3] = 3;
  CHECK_FALSE(verify_smith_vector(chain).chain_matches);

  SmithVector short_v = good;
  short_v.entries.pop_back();
  CHECK_FALSE(verify_smith_vector(short_v).passed());
}

TEST_CASE("Smith vector orders against the rational oracle") {
  for (std::uint64_t n : {6, 10, 12}) {
    const SmithVector s = sv(n);
    const auto a = oracle::build_A(n);
    for (std::size_t j = 0; j < n; ++j) CHECK(oracle::cokernel_order(a, s.entries[j].coordinates()) == s.divisors[j]);
    CHECK(abs(oracle::det_rational(testutil::to_oracle(s.coordinate_matrix()))) == 1);
  }
}

TEST_CASE("order of a product entry is the product of orders") {
  for (auto [m, n] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {3, 4}, {2, 5}}) {
    const SmithVector p = sv(m), q = sv(n);
    const auto a = oracle::build_A(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto prod = sum_product(m, n, p.entries[i], q.entries[j]);
        CHECK(oracle::cokernel_order(a, prod.coordinates()) == p.divisors[i] * q.divisors[j]);
      }
  }
}

TEST_CASE("verify_smith_vector for every n up to 20") {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(verify_smith_vector(sv(n)).passed());
  }
}
