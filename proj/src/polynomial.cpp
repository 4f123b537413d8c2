#include "k3/polynomial.hpp"

#include <sstream>

namespace k3 {

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  Integer g = 0;
  Integer l = 1;
  for (const auto& c : p.coefficients()) {
    g = gcd(g, numerator(c));
    l = lcm(l, denominator(c));
  }
  return make_rational(g, l);
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Poly(Rational(0), a.variable_name()), a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  for (std::size_t k = rem.size(); k-- > db;) {
    const Rational f = rem[k] / bc.back();
    quot[k - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot), a.variable_name()), Poly(std::move(rem), a.variable_name())};
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  const Rational lc = p.leading();
  return p.map([&](const Rational& c) { return c / lc; });
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly shift(const Poly& p, const Rational& t) {
  const Poly lin(std::vector<Rational>{t, Rational(1)}, p.variable_name());
  Poly acc(Rational(0), p.variable_name());
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    acc = acc * lin + Poly(*it, p.variable_name());
  }
  return acc;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << to_string(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << p.variable_name();
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string to_coefficient_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ",";
    out += to_string(p.coefficients()[i]);
  }
  return out;
}

Poly parse_poly(std::string_view text, std::string var) {
  std::vector<Rational> cs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    cs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(cs), std::move(var));
}

RatFunc::RatFunc(Poly numerator, Poly denominator) {
  if (denominator.is_zero()) throw InvalidInput("rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = Poly(Rational(0), denominator.variable_name());
    den_ = Poly(Rational(1), denominator.variable_name());
    return;
  }
  const Poly g = gcd(numerator, denominator);
  num_ = divmod(numerator, g).quotient;
  den_ = divmod(denominator, g).quotient;
  const Rational lc = den_.leading();
  num_ = num_.map([&](const Rational& c) { return c / lc; });
  den_ = den_.map([&](const Rational& c) { return c / lc; });
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw InvalidInput("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& f) {
  const Poly& d = f.denominator();
  if (d.degree() == Degree(0)) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(d) + ")";
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::variable(int index, int nvars) {
  MultiPoly p;
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Degree MultiPoly::degree() const {
  Degree d;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int x : e) total += x;
    if (Degree(total) > d) d = Degree(total);
  }
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  // Keys drop trailing zero exponents.
  Exponents key = e;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace k3
