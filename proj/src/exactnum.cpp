#include "k3/exactnum.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cctype>

namespace k3 {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidInput("division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  if (m == 0) throw InvalidInput("modulus zero");
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  auto e = extended_gcd(mod(a, m), abs(m));
  if (e.g != 1) throw InvalidInput("not invertible modulo " + to_string(m));
  return mod(e.x, m);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidInput("integer out of 64-bit range: " + to_string(v));
  }
  return v.convert_to<std::int64_t>();
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  return Rational(num, den);
}

Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

Rational mod(const Rational& r, const Integer& m) {
  Rational mm(m);
  Rational q(floor(r / mm));
  return r - q * mm;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InvalidInput("not an integer: '" + std::string(text) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

QMod2Z::QMod2Z(const Rational& value) : value_(mod(value, Integer(2))) {}

std::strong_ordering operator<=>(const QMod2Z& a, const QMod2Z& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const QMod2Z& q) { return to_string(q.value()); }

std::ostream& operator<<(std::ostream& os, const QMod2Z& q) { return os << to_string(q); }

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw InvalidInput("ragged matrix literal");
    Index j = 0;
    for (long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

IntVector int_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = Integer(e);
  return v;
}

IntMatrix identity_matrix(Index n) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

bool is_symmetric(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Index rank(const IntMatrix& m) {
  RatMatrix a = to_rational(m);
  Index r = 0;
  for (Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Index pivot = -1;
    for (Index i = r; i < a.rows(); ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(r).swap(a.row(pivot));
    for (Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(r, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace k3
