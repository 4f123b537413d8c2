#pragma once

// JSON encodings. Objects use sorted keys; integers that fit in 64 bits are
// JSON numbers, larger ones and all rationals are strings ("p/q").

#include "k3/exactnum.hpp"
#include "k3/hermite.hpp"
#include "k3/lattice.hpp"
#include "k3/polynomial.hpp"

#include <json.hpp>

namespace k3::io {

using Json = nlohmann::json;

Json to_json(const Integer& v);
Json to_json(const Rational& r);
Json to_json(const QMod2Z& q);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<Integer>& v);
/// Coefficient list, lowest degree first: "0,-1,0,4".
Json to_json(const Poly& p);
Json to_json(const RatFunc& f);
/// Coefficient lists (in t) of each power of x.
Json to_json(const PolyX& p);
Json to_json(const Signature& s);
/// {"rank": r, "gram": [[...]]}
Json to_json(const GramLattice& l);
/// {"orders": [...], "q": ["p/q", ...], "bilinear": [[...]]}
Json to_json(const DiscriminantForm& d);

std::string display(const PolyX& p);

/// "a0;a1;a2;a3;a4", each a coefficient list in t.
std::array<Poly, 5> parse_coefficients(std::string_view text);

}  // namespace k3::io
