#include "cyclo/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclo {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t k, const Integer& c) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[n] += 1;
  v[0] -= 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree IntPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPolynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  std::vector<Integer> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

DivRem divrem_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw NotMonic("divrem_monic: divisor " + to_string(b) + " is not monic");
  const std::size_t db = *b.degree();
  if (a.degree() < b.degree()) return {IntPolynomial{}, a};

  std::vector<Integer> rem = a.coeffs();
  const std::size_t da = rem.size() - 1;
  std::vector<Integer> quot(da - db + 1);
  const auto& bc = b.coeffs();
  for (std::size_t k = da + 1; k-- > db;) {
    const Integer q = rem[k];
    if (sgn(q) == 0) continue;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k - db + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    }
  }
  rem.resize(db);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial rem_monic(const IntPolynomial& a, const IntPolynomial& b) { return divrem_monic(a, b).remainder; }

Integer eval(const IntPolynomial& a, const Integer& x) {
  Integer acc = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

IntPolynomial compose_power(const IntPolynomial& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("compose_power: k must be positive");
  if (a.is_zero() || k == 1) return a;
  const auto& c = a.coeffs();
  std::vector<Integer> out((c.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
  return IntPolynomial(std::move(out));
}

Integer height(const IntPolynomial& a) {
  Integer h = 0;
  for (const auto& c : a.coeffs()) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

std::string to_string(const IntPolynomial& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  const auto& c = a.coeffs();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    if (first) {
      if (sgn(c[k]) < 0) os << '-';
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    os << abs(c[k]).get_str();
    if (k == 1) os << "*X";
    else if (k > 1) os << "*X^" << k;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPolynomial parse() {
    std::vector<Integer> coeffs;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      auto [c, k] = term();
      if (coeffs.size() <= k) coeffs.resize(k + 1);
      coeffs[k] += sign * c;
    }
    return IntPolynomial(std::move(coeffs));
  }

 private:
  std::pair<Integer, std::size_t> term() {
    Integer c = 1;
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = Integer(digits(), 10);
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !is_var(peek())) fail("expected X after '*'");
      }
    }
    if (pos_ < s_.size() && is_var(peek())) {
      ++pos_;
      skip_ws();
      std::size_t k = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        k = std::stoul(digits());
      }
      return {c, k};
    }
    if (!have_coeff) fail("expected a term");
    return {c, 0};
  }

  static bool is_var(char ch) { return ch == 'X' || ch == 'x' || ch == 't'; }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at column " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const IntPolynomial& a) { return os << to_string(a); }

}  // namespace cyclo
