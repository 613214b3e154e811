#include "cyclo/snf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

struct Position {
  std::size_t row, col;
};

// Least nonzero |a(i,j)| over i, j >= t, first in row-major order on ties.
std::optional<Position> find_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& x = a(i, j);
      if (sgn(x) == 0) continue;
      if (!best || mpz_cmpabs(x.get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  }
  return best;
}

}  // namespace

SnfResult snf(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t steps = std::min(a.rows(), a.cols());
  Integer q;

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      auto pivot = find_pivot(a, t);
      if (!pivot) return {std::move(a), std::move(u), std::move(v)};
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the active submatrix; otherwise pull an
      // offending row into row t and reduce again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!divides(a(t, t), a(i, j))) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      a.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

YoungDiagram::YoungDiagram(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
  }
}

std::size_t YoungDiagram::nonzero_parts() const noexcept {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](std::size_t x) { return x > 0; }));
}

std::size_t YoungDiagram::boxes() const noexcept {
  std::size_t total = 0;
  for (auto x : parts_) total += x;
  return total;
}

bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
  const std::size_t k = a.nonzero_parts();
  if (k != b.nonzero_parts()) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (a.part(i) != b.part(i)) return false;
  return true;
}

TableauFamily::TableauFamily(std::size_t n, std::vector<PrimeTableau> entries) : n_(n), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].prime < 2) throw std::invalid_argument("TableauFamily: prime must be >= 2");
    if (i > 0 && entries_[i].prime <= entries_[i - 1].prime) {
      throw std::invalid_argument("TableauFamily: primes must be strictly increasing");
    }
    if (entries_[i].diagram.nonzero_parts() > n_) {
      throw std::invalid_argument("TableauFamily: diagram has more than n nonzero parts");
    }
  }
}

const YoungDiagram* TableauFamily::find(const Integer& p) const {
  for (const auto& e : entries_)
    if (e.prime == p) return &e.diagram;
  return nullptr;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& a) {
  Integer m = abs(a);
  if (sgn(m) == 0) throw ZeroEntry("factor_integer: cannot factor 0");
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](const Integer& p) {
    unsigned k = 0;
    while (divides(p, m)) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
      ++k;
    }
    if (k) out.emplace_back(p, k);
  };
  strip(2);
  for (Integer p = 3; p * p <= m; p += 2) strip(p);
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

TableauFamily partitions_of_diagonal(std::span<const Integer> entries) {
  std::map<Integer, std::vector<std::size_t>> valuations;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (sgn(entries[i]) == 0) throw ZeroEntry("partitions_of_diagonal: entry " + std::to_string(i) + " is zero");
    for (const auto& [p, k] : factor_integer(entries[i])) {
      auto& v = valuations[p];
      v.resize(entries.size(), 0);
      v[i] = k;
    }
  }
  std::vector<PrimeTableau> fam;
  for (auto& [p, v] : valuations) {
    std::sort(v.begin(), v.end(), std::greater<>());
    fam.push_back({p, YoungDiagram(std::move(v))});
  }
  return TableauFamily(entries.size(), std::move(fam));
}

std::vector<Integer> divisors_from_partitions(const TableauFamily& family, std::size_t n) {
  for (const auto& e : family.entries()) {
    if (e.diagram.nonzero_parts() > n) throw std::invalid_argument("divisors_from_partitions: diagram taller than n");
  }
  std::vector<Integer> out(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& e : family.entries()) out[k] *= pow(e.prime, e.diagram.part(n - 1 - k));
  }
  return out;
}

std::vector<Integer> snf_diagonal(std::span<const Integer> entries) {
  std::vector<Integer> nonzero;
  for (const auto& x : entries)
    if (sgn(x) != 0) nonzero.push_back(x);
  std::vector<Integer> out = divisors_from_partitions(partitions_of_diagonal(nonzero), nonzero.size());
  out.resize(entries.size(), 0);
  return out;
}

Integer cokernel_order(const SnfResult& r, std::span<const Integer> v) {
  if (!r.S.is_square()) throw std::invalid_argument("cokernel_order: matrix must be square");
  if (v.size() != r.S.rows()) throw std::invalid_argument("cokernel_order: vector length mismatch");
  const std::vector<Integer> w = r.U * v;
  Integer order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Integer& e = r.S(i, i);
    if (sgn(e) == 0) throw Singular("cokernel_order: matrix is singular");
    order = lcm(order, exact_div(e, gcd(e, w[i])));
  }
  return order;
}

}  // namespace cyclo
