#include "k3/io.hpp"

#include <limits>

namespace k3::io {

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return to_int64(v);
  }
  return v.str();
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QMod2Z& q) { return to_string(q); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Poly& p) { return to_coefficient_string(p); }

Json to_json(const RatFunc& f) {
  return {{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}, {"text", to_string(f)}};
}

Json to_json(const PolyX& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Signature& s) {
  return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json to_json(const GramLattice& l) { return {{"rank", l.rank()}, {"gram", to_json(l.gram())}}; }

Json to_json(const DiscriminantForm& d) {
  Json q = Json::array();
  for (const auto& v : d.q_values()) q.push_back(to_json(v));
  Json b = Json::array();
  for (Index i = 0; i < d.bilinear().rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < d.bilinear().cols(); ++j) row.push_back(to_json(Rational(d.bilinear()(i, j))));
    b.push_back(row);
  }
  return {{"orders", to_json(d.orders())}, {"q", q}, {"bilinear", b}};
}

std::string display(const PolyX& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const Poly& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    const bool simple = c.degree() <= Degree(0);
    const bool negative = simple && c[0] < 0;
    const Rational magnitude = negative ? Rational(-c[0]) : c[0];
    std::string body;
    const std::string power = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    if (!simple) {
      body = "(" + to_string(c) + ")" + (k == 0 ? "" : "*" + power);
    } else if (k == 0) {
      body = to_string(magnitude);
    } else {
      body = magnitude == 1 ? power : to_string(magnitude) + "*" + power;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::array<Poly, 5> parse_coefficients(std::string_view text) {
  std::array<Poly, 5> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto semi = text.find(';', start);
    if ((i < 4) == (semi == std::string_view::npos)) {
      throw InvalidInput("--coeffs needs exactly five ';'-separated coefficient lists");
    }
    out[i] = parse_poly(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    start = semi + 1;
  }
  return out;
}

}  // namespace k3::io
