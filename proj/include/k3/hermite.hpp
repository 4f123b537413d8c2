#pragma once

// Genus one curves w^2 = a0 v^4 + 4 a1 v^3 + 6 a2 v^2 + 4 a3 v + a4 with
// coefficients in Q[t]: Hermite's Jacobian y^2 = 4x^3 - g2 x - g3, the
// symmetric conic matrix M with det(M) = 4x^3 - g2 x - g3, the trigonal
// resolvent and the quaternion symbol of a diagonalized M.

#include "k3/congruence.hpp"
#include "k3/exactnum.hpp"
#include "k3/polynomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace k3 {

/// Polynomials in x whose coefficients are polynomials in t.
using PolyX = Polynomial<Poly>;

/// Binomial-convention coefficients a0 .. a4.
struct QuarticModel {
  std::array<Poly, 5> a;
  /// Upper bounds on deg a_i, checked on construction when present.
  std::optional<std::array<int, 5>> declared_degrees;

  QuarticModel() = default;
  explicit QuarticModel(std::array<Poly, 5> coeffs, std::optional<std::array<int, 5>> degrees = std::nullopt);

  /// From w^2 = c0 v^4 + c1 v^3 + c2 v^2 + c3 v + c4: divides by (1, 4, 6, 4, 1).
  static QuarticModel from_plain(const std::array<Poly, 5>& c);
  static QuarticModel constant(const std::array<Rational, 5>& a);

  bool is_constant() const;
  /// Every a_i evaluated at t.
  QuarticModel specialize(const Rational& t) const;
  /// The quartic in v for constant coefficients.
  Poly quartic() const;
};

/// Degree bounds on the a_i for a double quadric (all 4) and a nodal sextic
/// (deg a_i = i + 2).
inline constexpr std::array<int, 5> kDoubleQuadricDegrees{4, 4, 4, 4, 4};
inline constexpr std::array<int, 5> kNodalSexticDegrees{2, 3, 4, 5, 6};

/// Invariants of a0 v^4 + 4a1 v^3 + 6a2 v^2 + 4a3 v + a4 over any ring.
template <typename R>
R hermite_g2(const std::array<R, 5>& a) {
  return a[0] * a[4] - R(4) * a[1] * a[3] + R(3) * a[2] * a[2];
}

template <typename R>
R hermite_g3(const std::array<R, 5>& a) {
  return a[0] * a[2] * a[4] - a[0] * a[3] * a[3] - a[1] * a[1] * a[4] + R(2) * a[1] * a[2] * a[3] -
         a[2] * a[2] * a[2];
}

/// Row-major entries of M = [[a0, a1, a2 + 2x], [a1, a2 - x, a3], [a2 + 2x, a3, a4]].
template <typename R>
std::array<R, 9> conic_entries(const std::array<R, 5>& a, const R& x) {
  const R c = a[2] + R(2) * x;
  return {a[0], a[1], c, a[1], a[2] - x, a[3], c, a[3], a[4]};
}

template <typename R>
R det3(const std::array<R, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

/// Coefficients of the quartic after v -> v + s, in the binomial convention.
template <typename R>
std::array<R, 5> translate(const std::array<R, 5>& a, const R& s) {
  static constexpr int binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  // c[m] is the coefficient of v^m.
  std::array<R, 5> c;
  for (int k = 0; k < 5; ++k) c[static_cast<std::size_t>(4 - k)] = R(binom[4][k]) * a[static_cast<std::size_t>(k)];
  std::array<R, 5> shifted;
  for (int j = 0; j < 5; ++j) {
    R acc(0);
    R power(1);
    for (int m = j; m < 5; ++m) {
      acc = acc + R(binom[m][j]) * c[static_cast<std::size_t>(m)] * power;
      power = power * s;
    }
    shifted[static_cast<std::size_t>(j)] = acc;
  }
  std::array<R, 5> out;
  for (int k = 0; k < 5; ++k) out[static_cast<std::size_t>(k)] = shifted[static_cast<std::size_t>(4 - k)];
  for (int k = 1; k < 4; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] * R(Rational(1) / binom[4][k]);
  return out;
}

struct WeierstrassModel {
  Poly g2;
  Poly g3;

  /// 4x^3 - g2 x - g3.
  PolyX cubic() const;
};

WeierstrassModel hermite_jacobian(const QuarticModel& q);

/// g2^3 - 27 g3^2; the zero polynomial flags a singular family.
Poly weierstrass_disc(const WeierstrassModel& w);

struct ConicMatrix {
  Matrix<PolyX> m;
  PolyX det;
  /// det(M) == 4x^3 - g2 x - g3.
  bool identity_verified = false;
  /// det(M) == 4x^3 - g2 x + g3, which is what M actually satisfies.
  bool identity_plus_g3 = false;
};

/// Builds M and compares det(M) with 4x^3 - g2 x - g3.
ConicMatrix conic_matrix(const QuarticModel& q);

/// det(M) - (4x^3 - g2 x - g3) expanded with a0..a4 and x as six
/// independent indeterminates; true when it vanishes.
bool conic_identity_holds_symbolically();
/// Same with 4x^3 - g2 x + g3.
bool conic_identity_plus_g3_holds_symbolically();

/// g2 and g3 after v -> v + t with a0..a4, t independent indeterminates;
/// true when both are unchanged.
bool hermite_invariants_translation_invariant();

struct FibrationNumerics {
  Integer d;
  Integer genus;
  Integer euler;
  Integer theta_dim;
  std::string theta_parity;
  /// 2g - 2 and 2 deg(theta) with theta = (2d - 1)F restricted, F.C = 3.
  Integer canonical_degree;
  Integer twice_theta_degree;
};

FibrationNumerics fibration_numerics(const Integer& d);

using RealHP = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<100, boost::multiprecision::backends::digit_base_2>,
    boost::multiprecision::et_off>;
using ComplexHP = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<100, boost::multiprecision::backends::digit_base_2>>,
    boost::multiprecision::et_off>;

/// Roots of a univariate polynomial with rational coefficients, by
/// simultaneous (Aberth) iteration at 100-bit precision.
std::vector<ComplexHP> complex_roots(const Poly& p);

struct TrigonalReport {
  WeierstrassModel cubic;
  std::vector<std::complex<double>> quartic_roots;
  std::vector<std::complex<double>> pairings;
  std::vector<std::complex<double>> cubic_roots;
  /// x = alpha * theta + beta, fitted over all matchings of the triples.
  std::complex<double> alpha;
  std::complex<double> beta;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

inline constexpr double kDefaultTolerance = 1e-8;

/// Requires constant coefficients, a0 != 0 and four distinct roots.
TrigonalReport trigonal_resolvent(const QuarticModel& q, double tol = kDefaultTolerance);

/// M over Q(x) for a model with constant coefficients.
Matrix<RatFunc> conic_matrix_over_field(const QuarticModel& q);

struct ConicDiagonalization {
  Matrix<RatFunc> m;
  Matrix<RatFunc> p;
  std::array<RatFunc, 3> d;
  /// P^T M P == diag(d), checked exactly.
  bool identity_verified = false;
};

/// Congruence diagonalization of the conic matrix; rejects singular M.
ConicDiagonalization diagonalize_conic(const QuarticModel& q);

/// P^T M P computed entrywise.
Matrix<RatFunc> congruence(const Matrix<RatFunc>& p, const Matrix<RatFunc>& m);

/// (-fg, -fh); rejects zero entries.
std::pair<RatFunc, RatFunc> quaternion_symbol(const std::array<RatFunc, 3>& d);

}  // namespace k3
