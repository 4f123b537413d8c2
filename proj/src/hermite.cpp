#include "k3/hermite.hpp"

#include <algorithm>
#include <limits>

namespace k3 {

namespace {

const std::array<int, 5> kBinomial{1, 4, 6, 4, 1};

Poly in_t(Poly p) {
  p.set_variable_name("t");
  return p;
}

}  // namespace

QuarticModel::QuarticModel(std::array<Poly, 5> coeffs, std::optional<std::array<int, 5>> degrees)
    : a(std::move(coeffs)), declared_degrees(degrees) {
  if (std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); })) {
    throw InvalidInput("quartic model: all coefficients are zero");
  }
  for (auto& p : a) p = in_t(p);
  if (declared_degrees) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (a[i].degree() > Degree((*declared_degrees)[i])) {
        throw InvalidInput("quartic model: deg a" + std::to_string(i) + " = " + a[i].degree().str() +
                           " exceeds declared " + std::to_string((*declared_degrees)[i]));
      }
    }
  }
}

QuarticModel QuarticModel::from_plain(const std::array<Poly, 5>& c) {
  std::array<Poly, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = c[i] * Poly(Rational(1) / kBinomial[i]);
  return QuarticModel(a);
}

QuarticModel QuarticModel::constant(const std::array<Rational, 5>& a) {
  std::array<Poly, 5> p;
  for (std::size_t i = 0; i < 5; ++i) p[i] = Poly(a[i], "t");
  return QuarticModel(p);
}

bool QuarticModel::is_constant() const {
  return std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.degree() <= Degree(0); });
}

QuarticModel QuarticModel::specialize(const Rational& t) const {
  std::array<Poly, 5> p;
  for (std::size_t i = 0; i < 5; ++i) p[i] = Poly(a[i].eval(t), "t");
  return QuarticModel(p);
}

Poly QuarticModel::quartic() const {
  if (!is_constant()) throw InvalidInput("quartic(): coefficients must be constant");
  std::vector<Rational> cs(5);
  for (std::size_t i = 0; i < 5; ++i) cs[4 - i] = a[i][0] * kBinomial[i];
  return Poly(std::move(cs), "v");
}

PolyX WeierstrassModel::cubic() const {
  return PolyX(std::vector<Poly>{-g3, -g2, Poly(Rational(0), "t"), Poly(Rational(4), "t")}, "x");
}

WeierstrassModel hermite_jacobian(const QuarticModel& q) {
  return {in_t(hermite_g2(q.a)), in_t(hermite_g3(q.a))};
}

Poly weierstrass_disc(const WeierstrassModel& w) {
  return in_t(w.g2 * w.g2 * w.g2 - Poly(Rational(27)) * w.g3 * w.g3);
}

ConicMatrix conic_matrix(const QuarticModel& q) {
  std::array<PolyX, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = PolyX(q.a[i], "x");
  const auto e = conic_entries(a, PolyX::variable("x"));
  ConicMatrix out;
  out.m.resize(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) out.m(i, j) = e[static_cast<std::size_t>(3 * i + j)];
  out.det = det3(e);
  const auto w = hermite_jacobian(q);
  out.identity_verified = out.det == w.cubic();
  out.identity_plus_g3 = out.det == WeierstrassModel{w.g2, -w.g3}.cubic();
  return out;
}

namespace {

bool symbolic_det_check(int g3_sign) {
  std::array<MultiPoly, 5> a;
  for (int i = 0; i < 5; ++i) a[static_cast<std::size_t>(i)] = MultiPoly::variable(i, 6);
  const MultiPoly x = MultiPoly::variable(5, 6);
  const MultiPoly lhs = det3(conic_entries(a, x));
  const MultiPoly rhs = MultiPoly(4) * x * x * x - hermite_g2(a) * x + MultiPoly(g3_sign) * hermite_g3(a);
  return (lhs - rhs).is_zero();
}

}  // namespace

bool conic_identity_holds_symbolically() { return symbolic_det_check(-1); }
bool conic_identity_plus_g3_holds_symbolically() { return symbolic_det_check(1); }

bool hermite_invariants_translation_invariant() {
  std::array<MultiPoly, 5> a;
  for (int i = 0; i < 5; ++i) a[static_cast<std::size_t>(i)] = MultiPoly::variable(i, 6);
  const auto moved = translate(a, MultiPoly::variable(5, 6));
  return hermite_g2(moved) == hermite_g2(a) && hermite_g3(moved) == hermite_g3(a);
}

FibrationNumerics fibration_numerics(const Integer& d) {
  if (d < 1) throw InvalidInput("fibration numerics need d >= 1");
  FibrationNumerics f;
  f.d = d;
  f.genus = 6 * d - 2;
  f.euler = 4 + 2 * f.genus;
  f.theta_dim = 2 * d;
  f.theta_parity = "even";
  f.canonical_degree = 2 * f.genus - 2;
  f.twice_theta_degree = 2 * ((2 * d - 1) * 3);
  return f;
}

// ------------------------------------------------------------ numerical oracle

namespace {

RealHP to_real(const Rational& r) {
  return RealHP(Integer(numerator(r)).str()) / RealHP(Integer(denominator(r)).str());
}

std::complex<double> to_double(const ComplexHP& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

ComplexHP horner(const std::vector<ComplexHP>& c, const ComplexHP& z) {
  ComplexHP acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<ComplexHP> complex_roots(const Poly& p) {
  if (p.degree() < Degree(1)) return {};
  const int n = p.degree().value();
  std::vector<ComplexHP> c;
  const Rational lead = p.leading();
  for (int i = 0; i <= n; ++i) c.emplace_back(to_real(p[static_cast<std::size_t>(i)] / lead));
  std::vector<ComplexHP> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * RealHP(i));

  // Cauchy bound for the starting circle.
  RealHP radius(0);
  for (int i = 0; i < n; ++i) radius = std::max(radius, RealHP(abs(c[static_cast<std::size_t>(i)])));
  radius += 1;
  std::vector<ComplexHP> z;
  const RealHP angle = boost::math::constants::two_pi<RealHP>() / n;
  for (int k = 0; k < n; ++k) {
    const RealHP th = angle * k + RealHP(0.4);
    z.emplace_back(radius * cos(th), radius * sin(th));
  }

  const RealHP eps = std::numeric_limits<RealHP>::epsilon() * 16;
  for (int iter = 0; iter < 500; ++iter) {
    RealHP worst(0);
    for (int k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const ComplexHP f = horner(c, z[kk]);
      if (abs(f) == 0) continue;
      const ComplexHP ratio = f / horner(dc, z[kk]);
      ComplexHP sum(0);
      for (int j = 0; j < n; ++j)
        if (j != k) sum += ComplexHP(1) / (z[kk] - z[static_cast<std::size_t>(j)]);
      const ComplexHP step = ratio / (ComplexHP(1) - ratio * sum);
      z[kk] -= step;
      worst = std::max(worst, RealHP(abs(step) / (1 + abs(z[kk]))));
    }
    if (worst < eps) break;
  }
  std::sort(z.begin(), z.end(), [](const ComplexHP& u, const ComplexHP& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
  return z;
}

TrigonalReport trigonal_resolvent(const QuarticModel& q, double tol) {
  if (!q.is_constant()) throw InvalidInput("trigonal resolvent needs a rational specialization");
  if (q.a[0].is_zero()) throw InvalidInput("trigonal resolvent needs a0 != 0");
  const Poly quartic = q.quartic();
  Poly deriv;
  {
    std::vector<Rational> cs;
    for (std::size_t i = 1; i < 5; ++i) cs.push_back(quartic[i] * static_cast<int>(i));
    deriv = Poly(cs, "v");
  }
  if (gcd(quartic, deriv).degree() > Degree(0)) throw InvalidInput("quartic has a repeated root");

  TrigonalReport r;
  r.cubic = hermite_jacobian(q);
  r.tolerance = tol;
  const auto e = complex_roots(quartic);
  const std::array<ComplexHP, 3> theta{e[0] * e[1] + e[2] * e[3], e[0] * e[2] + e[1] * e[3],
                                       e[0] * e[3] + e[1] * e[2]};
  const Poly cubic({-r.cubic.g3[0], -r.cubic.g2[0], Rational(0), Rational(4)}, "x");
  const auto x = complex_roots(cubic);

  for (const auto& v : e) r.quartic_roots.push_back(to_double(v));
  for (const auto& v : theta) r.pairings.push_back(to_double(v));
  for (const auto& v : x) r.cubic_roots.push_back(to_double(v));

  std::array<int, 3> perm{0, 1, 2};
  std::optional<RealHP> best;
  const ComplexHP tbar = (theta[0] + theta[1] + theta[2]) / RealHP(3);
  do {
    std::array<ComplexHP, 3> target;
    for (std::size_t i = 0; i < 3; ++i) target[i] = x[static_cast<std::size_t>(perm[i])];
    const ComplexHP xbar = (target[0] + target[1] + target[2]) / RealHP(3);
    ComplexHP num(0);
    RealHP den(0);
    for (std::size_t i = 0; i < 3; ++i) {
      const ComplexHP dt = theta[i] - tbar;
      num += conj(dt) * (target[i] - xbar);
      den += real(conj(dt) * dt);
    }
    const ComplexHP alpha = num / den;
    const ComplexHP beta = xbar - alpha * tbar;
    RealHP res(0);
    for (std::size_t i = 0; i < 3; ++i) res = std::max(res, RealHP(abs(alpha * theta[i] + beta - target[i])));
    if (!best || res < *best) {
      best = res;
      r.alpha = to_double(alpha);
      r.beta = to_double(beta);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.residual = static_cast<double>(*best);
  r.passed = r.residual < tol;
  return r;
}

// ------------------------------------------------------------ diagonalization

Matrix<RatFunc> conic_matrix_over_field(const QuarticModel& q) {
  if (!q.is_constant()) throw InvalidInput("diagonalization needs constant coefficients");
  std::array<RatFunc, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = RatFunc(q.a[i][0]);
  const auto e = conic_entries(a, RatFunc(Poly::variable("x")));
  Matrix<RatFunc> m(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) m(i, j) = e[static_cast<std::size_t>(3 * i + j)];
  return m;
}

Matrix<RatFunc> congruence(const Matrix<RatFunc>& p, const Matrix<RatFunc>& m) {
  const Index n = m.rows();
  Matrix<RatFunc> mp(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      RatFunc s;
      for (Index k = 0; k < n; ++k) s += m(i, k) * p(k, j);
      mp(i, j) = s;
    }
  Matrix<RatFunc> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      RatFunc s;
      for (Index k = 0; k < n; ++k) s += p(k, i) * mp(k, j);
      out(i, j) = s;
    }
  return out;
}

ConicDiagonalization diagonalize_conic(const QuarticModel& q) {
  ConicDiagonalization out;
  out.m = conic_matrix_over_field(q);
  auto dz = diagonalize_symmetric<RatFunc>(out.m);
  out.p = std::move(dz.P);
  for (std::size_t i = 0; i < 3; ++i) out.d[i] = dz.diagonal[i];
  const Matrix<RatFunc> check = congruence(out.p, out.m);
  out.identity_verified = true;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const RatFunc expect = i == j ? out.d[static_cast<std::size_t>(i)] : RatFunc(0);
      if (!(check(i, j) == expect)) out.identity_verified = false;
    }
  return out;
}

std::pair<RatFunc, RatFunc> quaternion_symbol(const std::array<RatFunc, 3>& d) {
  for (const auto& f : d)
    if (f.is_zero()) throw InvalidInput("quaternion symbol needs nonzero diagonal entries");
  return {-(d[0] * d[1]), -(d[0] * d[2])};
}

}  // namespace k3
