#include "cyclo/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclo {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void IntMatrix::set_column(std::size_t j, std::span<const Integer> values) {
  if (values.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j).swap((*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a).swap((*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    mpz_addmul((*this)(dst, j).get_mpz_t(), factor.get_mpz_t(), (*this)(src, j).get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_addmul((*this)(i, dst).get_mpz_t(), factor.get_mpz_t(), (*this)(i, src).get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (auto& x : row(i)) x = -x;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Integer> IntMatrix::diagonal_entries() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) out.push_back((*this)(i, i));
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_addmul(out[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return k;
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).get_str();
    }
    os << '\n';
  }
}

IntMatrix read_matrix(std::istream& is) {
  std::string token;
  auto next = [&](const char* what) {
    if (!(is >> token)) throw ParseError(std::string("matrix: unexpected end of input reading ") + what);
    return parse_integer(token);
  };
  Integer r = next("row count");
  Integer c = next("column count");
  if (sgn(r) < 0 || sgn(c) < 0 || !r.fits_ulong_p() || !c.fits_ulong_p()) throw ParseError("matrix: bad dimensions");
  IntMatrix m(r.get_ui(), c.get_ui());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = next("entry");
  if (is >> token) throw ParseError("matrix: trailing data '" + token + "'");
  return m;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace cyclo
