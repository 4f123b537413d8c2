#pragma once

// Dense univariate polynomials over an arbitrary commutative coefficient
// ring, rational functions over Q, and a small sparse multivariate type
// used to treat quartic coefficients as free indeterminates.

#include "k3/exactnum.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k3 {

/// Polynomial degree with the zero polynomial mapped to -infinity.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(int d) : finite_(true), value_(d) {}
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  /// Only meaningful when finite.
  constexpr int value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  int value_ = 0;
};

template <typename Coeff>
class Polynomial {
 public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(Coeff c, std::string var = "x")  // NOLINT(google-explicit-constructor)
      : coeffs_{std::move(c)}, var_(std::move(var)) {
    trim();
  }
  explicit Polynomial(std::vector<Coeff> coeffs, std::string var = "x")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  /// The monomial c * var^k.
  static Polynomial monomial(Coeff c, int k, std::string var = "x") {
    std::vector<Coeff> cs(static_cast<std::size_t>(k) + 1, Coeff(0));
    cs.back() = std::move(c);
    return Polynomial(std::move(cs), std::move(var));
  }
  static Polynomial variable(std::string var = "x") { return monomial(Coeff(1), 1, std::move(var)); }

  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  const std::string& variable_name() const { return var_; }
  void set_variable_name(std::string var) { var_ = std::move(var); }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const {
    return coeffs_.empty() ? Degree() : Degree(static_cast<int>(coeffs_.size()) - 1);
  }
  /// Coefficient of var^k (zero past the degree).
  Coeff operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
  Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

  template <typename Point>
  Point eval(const Point& at) const {
    Point acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Point(*it);
    return acc;
  }
  Coeff eval(const Coeff& at) const { return eval<Coeff>(at); }

  /// Applies f to every coefficient.
  template <typename F>
  auto map(F&& f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    std::vector<Out> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(f(c));
    return Polynomial<Out>(std::move(cs), var_);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    adopt_name(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.var_ = a.var_;
    r.adopt_name(b);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
  }
  void adopt_name(const Polynomial& o) {
    if (coeffs_.size() <= 1 && var_ == "x" && o.var_ != "x") var_ = o.var_;
  }

  std::vector<Coeff> coeffs_;
  std::string var_ = "x";
};

/// Univariate polynomial over Q.
using Poly = Polynomial<Rational>;

template <typename Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& p, unsigned k) {
  Polynomial<Coeff> r(Coeff(1), p.variable_name());
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

/// Positive rational c with p / c primitive integral; zero for p = 0.
Rational content(const Poly& p);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
/// p(x + t)
Poly shift(const Poly& p, const Rational& t);

std::string to_string(const Poly& p);
/// Comma-separated rational coefficients, lowest degree first ("0,-1,0,4").
std::string to_coefficient_string(const Poly& p);
Poly parse_poly(std::string_view text, std::string var = "t");

/// Reduced quotient of polynomials over Q with monic denominator.
class RatFunc {
 public:
  RatFunc() : RatFunc(Poly()) {}
  RatFunc(int c) : RatFunc(Poly(Rational(c))) {}        // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}       // NOLINT(google-explicit-constructor)
  RatFunc(Poly numerator) : RatFunc(std::move(numerator), Poly(Rational(1))) {}  // NOLINT
  RatFunc(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

std::string to_string(const RatFunc& f);

/// Sparse polynomial over Q in a fixed number of indeterminates. Ring
/// operations only.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);                 // NOLINT(google-explicit-constructor)
  static MultiPoly variable(int index, int nvars);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree.
  Degree degree() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

}  // namespace k3

namespace Eigen {

template <typename Coeff>
struct NumTraits<k3::Polynomial<Coeff>> : GenericNumTraits<k3::Polynomial<Coeff>> {
  using Real = k3::Polynomial<Coeff>;
  using NonInteger = k3::Polynomial<Coeff>;
  using Nested = k3::Polynomial<Coeff>;
  using Literal = k3::Polynomial<Coeff>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 50,
    MulCost = 200
  };
};

template <>
struct NumTraits<k3::RatFunc> : GenericNumTraits<k3::RatFunc> {
  using Real = k3::RatFunc;
  using NonInteger = k3::RatFunc;
  using Nested = k3::RatFunc;
  using Literal = k3::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 500
  };
};

template <>
struct NumTraits<k3::MultiPoly> : GenericNumTraits<k3::MultiPoly> {
  using Real = k3::MultiPoly;
  using NonInteger = k3::MultiPoly;
  using Nested = k3::MultiPoly;
  using Literal = k3::MultiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
};

}  // namespace Eigen
