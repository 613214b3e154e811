#include <doctest.h>

#include "convert.hpp"
#include "cyclo/cyclotomic.hpp"

using namespace cyclo;

TEST_CASE("cyclotomic") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("cyclotomic_prime_power") {
  CHECK(cyclotomic_prime_power(2, 1) == IntPolynomial{1, 1});
  CHECK(cyclotomic_prime_power(3, 1) == IntPolynomial{1, 1, 1});
  CHECK(cyclotomic_prime_power(2, 3) == IntPolynomial{1, 0, 0, 0, 1});
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned e = 1; pow(Integer(p), e) <= 128; ++e) {
      CHECK(cyclotomic(pow(Integer(p), e).get_ui()) == cyclotomic_prime_power(p, e));
    }
  }
}

TEST_CASE("all_cyclotomic_divisors") {
  auto ds = all_cyclotomic_divisors(1);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].d == 1);
  CHECK(ds[0].phi == IntPolynomial{-1, 1});

  ds = all_cyclotomic_divisors(6);
  REQUIRE(ds.size() == 4);
  const std::vector<std::uint64_t> want_d{1, 2, 3, 6};
  const std::vector<IntPolynomial> want_phi{{-1, 1}, {1, 1}, {1, 1, 1}, {1, -1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(ds[i].d == want_d[i]);
    CHECK(ds[i].phi == want_phi[i]);
  }

  ds = all_cyclotomic_divisors(4);
  REQUIRE(ds.size() == 3);
  CHECK(ds[2].phi == IntPolynomial{1, 0, 1});
}

TEST_CASE("product over divisors is X^n - 1") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPolynomial prod{1};
    for (const auto& f : all_cyclotomic_divisors(n)) prod = prod * f.phi;
    CHECK(prod == IntPolynomial::x_pow_minus_one(n));
  }
}

TEST_CASE("degree is phi(d) and matches the Mobius oracle") {
  for (std::uint64_t d = 1; d <= 200; ++d) {
    const IntPolynomial f = cyclotomic(d);
    CHECK(f.degree() == Degree{euler_phi(d)});
    CHECK(euler_phi(d) == oracle::phi(d));
    CHECK(testutil::to_oracle(f) == oracle::cyclotomic(d));
  }
}

TEST_CASE("height diagnostic") {
  // First heights above 1 appear at 105; stays tiny in this range.
  std::size_t max_bits = 0;
  for (std::uint64_t d = 1; d <= 500; ++d) max_bits = std::max(max_bits, bit_length(height(cyclotomic(d))));
  MESSAGE("max height bit length for d <= 500: " << max_bits);
  CHECK(max_bits <= 4);
}
