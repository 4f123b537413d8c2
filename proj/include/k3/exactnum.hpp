#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and rationals, Q/2Z
// residues and dense integer/rational matrices.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k3 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using Index = Eigen::Index;

/// Malformed user input or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of room without reaching a verdict.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- integers

Integer floor_div(const Integer& a, const Integer& b);
/// Least non-negative residue of a modulo |m|.
Integer mod(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // g = x*a + y*b, g >= 0
  Integer x;
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Inverse of a modulo m, or throws InvalidInput when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

bool is_prime(const Integer& n);

std::int64_t to_int64(const Integer& v);

// --------------------------------------------------------------- rationals

Rational make_rational(const Integer& num, const Integer& den);
Integer numerator(const Rational& r);
Integer denominator(const Rational& r);
Integer floor(const Rational& r);
/// Representative of r modulo m in [0, m).
Rational mod(const Rational& r, const Integer& m);

/// "p/q" or "p"; always reduced with positive denominator.
std::string to_string(const Integer& v);
std::string to_string(const Rational& r);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

// ------------------------------------------------------------------ Q / 2Z

/// Element of Q/2Z stored by its representative in [0, 2).
class QMod2Z {
 public:
  QMod2Z() = default;
  QMod2Z(const Rational& value);  // NOLINT(google-explicit-constructor)

  const Rational& value() const { return value_; }

  QMod2Z operator-() const { return QMod2Z(-value_); }
  friend QMod2Z operator+(const QMod2Z& a, const QMod2Z& b) {
    return QMod2Z(a.value_ + b.value_);
  }
  friend QMod2Z operator-(const QMod2Z& a, const QMod2Z& b) {
    return QMod2Z(a.value_ - b.value_);
  }
  /// Integer multiples are well defined on Q/2Z.
  friend QMod2Z operator*(const Integer& k, const QMod2Z& a) {
    return QMod2Z(Rational(k) * a.value_);
  }
  friend bool operator==(const QMod2Z& a, const QMod2Z& b) = default;
  friend std::strong_ordering operator<=>(const QMod2Z& a, const QMod2Z& b);

  bool is_zero() const { return value_ == 0; }

 private:
  Rational value_{0};
};

/// True iff a - b lies in 2Z.
inline bool qmod2z_eq(const QMod2Z& a, const QMod2Z& b) { return a == b; }

std::string to_string(const QMod2Z& q);
std::ostream& operator<<(std::ostream& os, const QMod2Z& q);

// ----------------------------------------------------------------- matrices

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntVector int_vector(std::initializer_list<long> entries);
IntMatrix identity_matrix(Index n);
RatMatrix to_rational(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Rank over Q.
Index rank(const IntMatrix& m);

template <typename Derived>
IntMatrix block_diagonal(const std::vector<Derived>& blocks) {
  Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out = IntMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace k3
