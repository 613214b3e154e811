#pragma once

// Slow, independent reference implementations used only by the tests. Nothing
// here calls into the library's arithmetic routes.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using Poly = std::vector<Z>;  // coefficient of X^i at [i]
using Mat = std::vector<std::vector<Z>>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// a mod b for monic b, schoolbook.
inline Poly poly_mod_monic(Poly a, const Poly& b) {
  const size_t db = b.size() - 1;
  for (size_t i = a.size(); i-- > db;) {
    const Z c = a[i];
    if (c == 0) continue;
    for (size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  trim(a);
  return a;
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Phi_d = prod_{e | d} (X^e - 1)^{mu(d/e)}: multiply the numerator factors, then
// divide out the denominators by synthetic division.
inline Poly cyclotomic(std::uint64_t d) {
  Poly acc{1};
  std::vector<std::uint64_t> den;
  for (std::uint64_t e : divisors(d)) {
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    if (mu < 0) {
      den.push_back(e);
      continue;
    }
    Poly f(e + 1);
    f[0] = -1;
    f[e] = 1;
    acc = poly_mul(acc, f);
  }
  for (std::uint64_t e : den) {
    // acc / (X^e - 1)
    Poly q(acc.size() - e);
    for (size_t i = acc.size(); i-- > e;) {
      q[i - e] = acc[i];
      acc[i - e] += acc[i];
      acc[i] = 0;
    }
    trim(acc);
    if (!acc.empty()) throw std::logic_error("oracle cyclotomic: inexact division");
    acc = q;
    trim(acc);
  }
  return acc;
}

// A_n column j = X^j mod Phi_d stacked over ascending d.
inline Mat build_A(std::uint64_t n) {
  Mat a(n, std::vector<Z>(n));
  for (std::uint64_t j = 0; j < n; ++j) {
    Poly xj(j + 1);
    xj[j] = 1;
    size_t row = 0;
    for (std::uint64_t d : divisors(n)) {
      const Poly f = cyclotomic(d);
      const Poly r = poly_mod_monic(xj, f);
      for (size_t i = 0; i + 1 < f.size(); ++i) a[row + i][j] = i < r.size() ? r[i] : Z(0);
      row += f.size() - 1;
    }
  }
  return a;
}

// Gaussian elimination over the rationals.
inline Z det_rational(const Mat& m) {
  const size_t n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Q det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  if (det.get_den() != 1) throw std::logic_error("oracle det: non-integral");
  return det.get_num();
}

// Cofactor expansion; only for tiny matrices.
inline Z det_cofactor(const Mat& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Z total = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Z> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const Z t = m[0][j] * det_cofactor(minor);
    total += (j % 2 ? -t : t);
  }
  return total;
}

inline void for_each_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& f) {
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors.
inline Z minors_gcd(const Mat& m, size_t k) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Z g = 0;
  for_each_subset(rows, k, [&](const std::vector<size_t>& ri) {
    for_each_subset(cols, k, [&](const std::vector<size_t>& ci) {
      Mat sub(k, std::vector<Z>(k));
      for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Z(det_rational(sub)).get_mpz_t());
    });
  });
  return g;
}

// Smith diagonal from determinantal divisors d_k / d_{k-1}; square nonsingular input only.
inline std::vector<Z> smith_by_minors(const Mat& m) {
  std::vector<Z> out;
  Z prev = 1;
  for (size_t k = 1; k <= m.size(); ++k) {
    const Z dk = minors_gcd(m, k);
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Least a > 0 with a*v in the column span of the nonsingular m: solve m x = v over Q.
inline Z cokernel_order(const Mat& m, const std::vector<Z>& v) {
  const size_t n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = v[i];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Z l = 1;
  for (size_t i = 0; i < n; ++i) {
    const Q x = a[i][n] / a[i][i];
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

// Resultant by the Euclidean recurrence over Q:
// R(f, g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} R(g, r), r = f mod g.
inline Q resultant_q(std::vector<Q> f, std::vector<Q> g) {
  auto tr = [](std::vector<Q>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  tr(f);
  tr(g);
  if (f.empty() || g.empty()) return 0;
  const long df = long(f.size()) - 1, dg = long(g.size()) - 1;
  if (dg == 0) {
    Q r = 1;
    for (long i = 0; i < df; ++i) r *= g[0];
    return r;
  }
  std::vector<Q> r = f;
  for (long i = df; i >= dg; --i) {
    const Q c = r[i] / g[dg];
    for (long k = 0; k <= dg; ++k) r[i - dg + k] -= c * g[k];
  }
  tr(r);
  if (r.empty()) return 0;
  const long dr = long(r.size()) - 1;
  Q scale = 1;
  for (long i = 0; i < df - dr; ++i) scale *= g[dg];
  if ((df * dg) % 2) scale = -scale;
  return scale * resultant_q(g, r);
}

inline Z resultant(const Poly& f, const Poly& g) {
  std::vector<Q> fq(f.begin(), f.end()), gq(g.begin(), g.end());
  const Q r = resultant_q(fq, gq);
  if (r.get_den() != 1) throw std::logic_error("oracle resultant: non-integral");
  return r.get_num();
}

inline Poly random_poly(std::mt19937_64& rng, size_t deg, int lo, int hi, bool monic) {
  std::uniform_int_distribution<int> c(lo, hi);
  Poly p(deg + 1);
  for (auto& x : p) x = c(rng);
  if (monic) p[deg] = 1;
  while (!monic && p[deg] == 0) p[deg] = c(rng);
  return p;
}

}  // namespace oracle
