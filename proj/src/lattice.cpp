#include "k3/lattice.hpp"

#include "k3/congruence.hpp"
#include "k3/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace k3 {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!is_symmetric(gram_)) throw InvalidInput("Gram matrix must be square and symmetric");
}

bool GramLattice::is_even() const {
  for (Index i = 0; i < rank(); ++i)
    if (mod(gram_(i, i), Integer(2)) != 0) return false;
  return true;
}

Integer GramLattice::determinant() const { return k3::determinant(gram_); }

Signature GramLattice::signature() const {
  auto diag = diagonalize_symmetric<Rational>(to_rational(gram_), true).diagonal;
  Signature s;
  for (const auto& v : diag) {
    if (v > 0) ++s.positive;
    else if (v < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

Integer GramLattice::inner(const IntVector& x, const IntVector& y) const {
  return (x.transpose() * gram_ * y)(0, 0);
}

Rational GramLattice::inner(const RatVector& x, const RatVector& y) const {
  return (x.transpose() * to_rational(gram_) * y)(0, 0);
}

GramLattice direct_sum(const std::vector<GramLattice>& parts) {
  std::vector<IntMatrix> blocks;
  blocks.reserve(parts.size());
  for (const auto& p : parts) blocks.push_back(p.gram());
  return GramLattice(block_diagonal(blocks));
}

GramLattice scaled(const GramLattice& l, const Integer& k) {
  IntMatrix g = l.gram();
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) g(i, j) *= k;
  return GramLattice(std::move(g));
}

GramLattice hyperbolic_plane() { return GramLattice(int_matrix({{0, 1}, {1, 0}})); }

GramLattice e8_negative() {
  // Minus the E8 Cartan matrix: a chain 0-2-3-4-5-6-7 with node 1 on node 3.
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = -2;
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) {
    g(e[0], e[1]) = 1;
    g(e[1], e[0]) = 1;
  }
  return GramLattice(std::move(g));
}

GramLattice k3_lattice() {
  const auto u = hyperbolic_plane();
  const auto e8 = e8_negative();
  return direct_sum({u, u, u, e8, e8});
}

GramLattice lambda_prime() {
  const auto u = hyperbolic_plane();
  const auto e8 = e8_negative();
  return direct_sum({u, u, e8, e8});
}

GramLattice gamma_lattice() { return lambda_prime(); }

GramLattice rank_one(const Integer& n) {
  IntMatrix g(1, 1);
  g(0, 0) = n;
  return GramLattice(std::move(g));
}

GramLattice lambda_bc(const Integer& b, const Integer& c) {
  if (b == 0) throw InvalidInput("lambda_bc requires b != 0");
  IntMatrix g(2, 2);
  g(0, 0) = 0;
  g(0, 1) = b;
  g(1, 0) = b;
  g(1, 1) = 2 * c;
  return GramLattice(std::move(g));
}

GramLattice gamma_bc(const Integer& b, const Integer& c) {
  const auto e8 = e8_negative();
  return direct_sum({lambda_bc(b, c), hyperbolic_plane(), e8, e8});
}

GramLattice transcendental_rank_one_k3(const Integer& d) {
  if (d <= 0) throw InvalidInput("polarization degree parameter d must be positive");
  return direct_sum({rank_one(-2 * d), lambda_prime()});
}

GramLattice standard_lattice(LatticeName name, const Integer& first, const Integer& second) {
  switch (name) {
    case LatticeName::U: return hyperbolic_plane();
    case LatticeName::E8_MINUS_1: return e8_negative();
    case LatticeName::LAMBDA_K3: return k3_lattice();
    case LatticeName::LAMBDA_PRIME: return lambda_prime();
    case LatticeName::RANK1:
      if (first == 0) throw InvalidInput("RANK1 requires a nonzero value");
      return rank_one(first);
    case LatticeName::LAMBDA_BC: return lambda_bc(first, second);
    case LatticeName::GAMMA_BC:
      if (first == 0) throw InvalidInput("GAMMA_BC requires b != 0");
      return gamma_bc(first, second);
    case LatticeName::GAMMA: return gamma_lattice();
  }
  throw InvalidInput("unknown lattice");
}

std::optional<LatticeName> parse_lattice_name(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '-' || ch == '_') continue;
    s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  if (s == "U") return LatticeName::U;
  if (s == "E8" || s == "E81" || s == "E8MINUS1") return LatticeName::E8_MINUS_1;
  if (s == "LAMBDAK3" || s == "K3") return LatticeName::LAMBDA_K3;
  if (s == "LAMBDAPRIME") return LatticeName::LAMBDA_PRIME;
  if (s == "RANK1") return LatticeName::RANK1;
  if (s == "LAMBDABC") return LatticeName::LAMBDA_BC;
  if (s == "GAMMABC") return LatticeName::GAMMA_BC;
  if (s == "GAMMA") return LatticeName::GAMMA;
  return std::nullopt;
}

std::string to_string(LatticeName name) {
  switch (name) {
    case LatticeName::U: return "U";
    case LatticeName::E8_MINUS_1: return "E8_MINUS_1";
    case LatticeName::LAMBDA_K3: return "LAMBDA_K3";
    case LatticeName::LAMBDA_PRIME: return "LAMBDA_PRIME";
    case LatticeName::RANK1: return "RANK1";
    case LatticeName::LAMBDA_BC: return "LAMBDA_BC";
    case LatticeName::GAMMA_BC: return "GAMMA_BC";
    case LatticeName::GAMMA: return "GAMMA";
  }
  return "?";
}

// ------------------------------------------------------ discriminant forms

DiscriminantForm::DiscriminantForm(std::vector<Integer> orders, std::vector<QMod2Z> q_values,
                                   RatMatrix bilinear, std::vector<RatVector> generator_lifts)
    : orders_(std::move(orders)), q_(std::move(q_values)), b_(std::move(bilinear)),
      lifts_(std::move(generator_lifts)) {
  const auto k = static_cast<Index>(orders_.size());
  if (static_cast<Index>(q_.size()) != k || b_.rows() != k || b_.cols() != k) {
    throw InvalidInput("discriminant form: inconsistent generator data");
  }
  if (!lifts_.empty() && static_cast<Index>(lifts_.size()) != k) {
    throw InvalidInput("discriminant form: one lift per generator required");
  }
  for (Index i = 0; i < k; ++i) {
    const Integer& n = orders_[static_cast<std::size_t>(i)];
    if (n < 2) throw InvalidInput("discriminant form: generator orders must exceed 1");
    for (Index j = 0; j < k; ++j) b_(i, j) = mod(b_(i, j), Integer(1));
    if (mod(q_[static_cast<std::size_t>(i)].value(), Integer(1)) != b_(i, i)) {
      throw InvalidInput("discriminant form: q and b disagree on a generator");
    }
    if (denominator(Rational(n) * q_[static_cast<std::size_t>(i)].value() * Rational(n) / 2) != 1) {
      throw InvalidInput("discriminant form: q not well defined on Z/" + to_string(n));
    }
  }
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      if (b_(i, j) != b_(j, i)) throw InvalidInput("discriminant form: b not symmetric");
      if (denominator(Rational(orders_[static_cast<std::size_t>(i)]) * b_(i, j)) != 1) {
        throw InvalidInput("discriminant form: b not well defined");
      }
    }
  }
}

DiscriminantForm DiscriminantForm::cyclic(const Integer& order, const QMod2Z& q) {
  RatMatrix b(1, 1);
  b(0, 0) = q.value();
  return DiscriminantForm({order}, {q}, std::move(b));
}

Integer DiscriminantForm::order() const {
  Integer n = 1;
  for (const auto& o : orders_) n *= o;
  return n;
}

std::vector<Integer> DiscriminantForm::invariant_factors() const {
  const auto k = static_cast<Index>(orders_.size());
  IntMatrix diag = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) diag(i, i) = orders_[static_cast<std::size_t>(i)];
  std::vector<Integer> out;
  for (const auto& d : smith_normal_form(diag).diagonal())
    if (d > 1) out.push_back(d);
  return out;
}

QMod2Z DiscriminantForm::q(const std::vector<Integer>& coords) const {
  if (coords.size() != orders_.size()) throw InvalidInput("discriminant form: coordinate length");
  Rational acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    acc += Rational(coords[i] * coords[i]) * q_[i].value();
    for (std::size_t j = i + 1; j < coords.size(); ++j) {
      acc += Rational(2 * coords[i] * coords[j]) * b_(static_cast<Index>(i), static_cast<Index>(j));
    }
  }
  return QMod2Z(acc);
}

Rational DiscriminantForm::b(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  if (x.size() != orders_.size() || y.size() != orders_.size()) {
    throw InvalidInput("discriminant form: coordinate length");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      acc += Rational(x[i] * y[j]) * b_(static_cast<Index>(i), static_cast<Index>(j));
  return mod(acc, Integer(1));
}

DiscriminantForm DiscriminantForm::negated() const {
  std::vector<QMod2Z> q;
  q.reserve(q_.size());
  for (const auto& v : q_) q.push_back(-v);
  RatMatrix b = -b_;
  return DiscriminantForm(orders_, std::move(q), std::move(b), lifts_);
}

DiscriminantForm discriminant_form(const GramLattice& l) {
  if (!l.is_nondegenerate()) throw InvalidInput("discriminant form of a degenerate lattice");
  if (!l.is_even()) throw InvalidInput("discriminant form requires an even lattice");
  const auto snf = smith_normal_form(l.gram());
  const auto diag = snf.diagonal();
  const RatMatrix g = to_rational(l.gram());

  std::vector<Integer> orders;
  std::vector<RatVector> lifts;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 1) continue;
    RatVector lift(l.rank());
    for (Index r = 0; r < l.rank(); ++r) {
      lift(r) = make_rational(snf.V(r, static_cast<Index>(i)), diag[i]);
    }
    orders.push_back(diag[i]);
    lifts.push_back(std::move(lift));
  }
  const auto k = static_cast<Index>(orders.size());
  std::vector<QMod2Z> q;
  RatMatrix b(k, k);
  for (Index i = 0; i < k; ++i) {
    const auto& li = lifts[static_cast<std::size_t>(i)];
    q.emplace_back((li.transpose() * g * li)(0, 0));
    for (Index j = 0; j < k; ++j) {
      b(i, j) = (li.transpose() * g * lifts[static_cast<std::size_t>(j)])(0, 0);
    }
  }
  return DiscriminantForm(std::move(orders), std::move(q), std::move(b), std::move(lifts));
}

DiscriminantForm orthogonal_sum(const DiscriminantForm& a, const DiscriminantForm& b) {
  std::vector<Integer> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<QMod2Z> q = a.q_values();
  q.insert(q.end(), b.q_values().begin(), b.q_values().end());
  const Index ka = static_cast<Index>(a.generator_count());
  const Index kb = static_cast<Index>(b.generator_count());
  RatMatrix bil = RatMatrix::Zero(ka + kb, ka + kb);
  bil.topLeftCorner(ka, ka) = a.bilinear();
  bil.bottomRightCorner(kb, kb) = b.bilinear();
  return DiscriminantForm(std::move(orders), std::move(q), std::move(bil));
}

// ---------------------------------------------------- finite enumeration

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

Integer common_denominator(const DiscriminantForm& d) {
  Integer m = 1;
  for (const auto& q : d.q_values()) m = lcm(m, denominator(q.value()));
  const auto& b = d.bilinear();
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) m = lcm(m, denominator(b(i, j)));
  return m;
}

// Elements indexed in mixed radix over the generator orders. q is scaled
// by a common denominator M and kept modulo 2M, b modulo M.
class FormTable {
 public:
  FormTable(const DiscriminantForm& d, u64 bound, const Integer& denominator)
      : m_(to_int64(denominator)) {
    const Integer order = d.order();
    if (order > Integer(bound)) {
      throw Inconclusive("group order " + to_string(order) + " exceeds enumeration bound " +
                         std::to_string(bound) + "; raise the bound");
    }
    size_ = static_cast<u64>(to_int64(order));
    for (const auto& o : d.orders()) radix_.push_back(to_int64(o));
    const std::size_t k = radix_.size();
    qgen_.resize(k);
    bgen_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      qgen_[i] = to_int64(numerator(d.q_values()[i].value() * Rational(denominator)));
      for (std::size_t j = 0; j < k; ++j) {
        bgen_[i * k + j] = to_int64(numerator(
            d.bilinear()(static_cast<Index>(i), static_cast<Index>(j)) * Rational(denominator)));
      }
    }
    qtable_.resize(size_);
    std::vector<i64> c(k, 0);
    for (u64 idx = 0; idx < size_; ++idx) {
      qtable_[idx] = q_of(c);
      increment(c);
    }
  }

  u64 size() const { return size_; }
  std::size_t rank() const { return radix_.size(); }
  i64 q(u64 idx) const { return qtable_[idx]; }

  std::vector<i64> coords(u64 idx) const {
    std::vector<i64> c(radix_.size());
    for (std::size_t i = radix_.size(); i-- > 0;) {
      c[i] = static_cast<i64>(idx % static_cast<u64>(radix_[i]));
      idx /= static_cast<u64>(radix_[i]);
    }
    return c;
  }
  u64 index(const std::vector<i64>& c) const {
    u64 idx = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      i64 v = c[i] % radix_[i];
      if (v < 0) v += radix_[i];
      idx = idx * static_cast<u64>(radix_[i]) + static_cast<u64>(v);
    }
    return idx;
  }
  u64 add(u64 x, u64 y) const {
    auto cx = coords(x);
    const auto cy = coords(y);
    for (std::size_t i = 0; i < cx.size(); ++i) cx[i] += cy[i];
    return index(cx);
  }
  u64 scale(u64 x, i64 k) const {
    auto c = coords(x);
    for (auto& v : c) v *= k;
    return index(c);
  }
  i64 b(u64 x, u64 y) const {
    const auto cx = coords(x);
    const auto cy = coords(y);
    const std::size_t k = radix_.size();
    __int128 acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (cx[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        acc = (acc + static_cast<__int128>(cx[i]) * cy[j] % m_ * bgen_[i * k + j]) % m_;
      }
    }
    i64 r = static_cast<i64>(acc % m_);
    return r < 0 ? r + m_ : r;
  }
  /// Order of the element x.
  u64 element_order(u64 x) const {
    u64 n = 1;
    for (u64 y = x; y != 0; y = add(y, x)) ++n;
    return n;
  }
  /// The subgroup generated by `base` (a subgroup, sorted) and x, sorted.
  std::vector<u64> extend(const std::vector<u64>& base, u64 x) const {
    std::vector<u64> out;
    u64 step = 0;
    do {
      for (u64 s : base) out.push_back(add(s, step));
      step = add(step, x);
    } while (step != 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<u64> span(const std::vector<u64>& gens) const {
    std::vector<u64> s{0};
    for (u64 g : gens)
      if (!std::binary_search(s.begin(), s.end(), g)) s = extend(s, g);
    return s;
  }
  std::vector<Integer> to_integer_coords(u64 idx) const {
    std::vector<Integer> out;
    for (i64 v : coords(idx)) out.emplace_back(v);
    return out;
  }

 private:
  void increment(std::vector<i64>& c) const {
    for (std::size_t i = c.size(); i-- > 0;) {
      if (++c[i] < radix_[i]) return;
      c[i] = 0;
    }
  }
  i64 q_of(const std::vector<i64>& c) const {
    const std::size_t k = c.size();
    const __int128 two_m = 2 * static_cast<__int128>(m_);
    __int128 acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      acc = (acc + static_cast<__int128>(c[i]) * c[i] % two_m * qgen_[i]) % two_m;
      for (std::size_t j = i + 1; j < k; ++j) {
        acc = (acc + 2 * (static_cast<__int128>(c[i]) * c[j] % two_m) % two_m * bgen_[i * k + j]) % two_m;
      }
    }
    i64 r = static_cast<i64>(acc % two_m);
    return r < 0 ? r + static_cast<i64>(two_m) : r;
  }

  i64 m_;
  u64 size_ = 1;
  std::vector<i64> radix_;
  std::vector<i64> qgen_;
  std::vector<i64> bgen_;
  std::vector<i64> qtable_;
};

std::vector<u64> canonical_generators(const FormTable& t, const std::vector<u64>& elements) {
  std::vector<u64> gens;
  std::vector<u64> span{0};
  for (u64 e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = t.extend(span, e);
  }
  return gens;
}

}  // namespace

std::vector<IsotropicSubgroup> isotropic_subgroups(const DiscriminantForm& d, std::uint64_t bound) {
  const FormTable t(d, bound, common_denominator(d));
  std::vector<u64> isotropic;
  for (u64 x = 1; x < t.size(); ++x)
    if (t.q(x) == 0) isotropic.push_back(x);

  struct Node {
    std::vector<u64> elements;
    std::vector<u64> gens;
  };
  std::set<std::vector<u64>> seen{{0}};
  std::vector<Node> queue{{{0}, {}}};
  std::vector<std::pair<std::vector<u64>, bool>> found;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node node = queue[head];
    bool extendable = false;
    for (u64 x : isotropic) {
      if (std::binary_search(node.elements.begin(), node.elements.end(), x)) continue;
      bool orthogonal = true;
      for (u64 g : node.gens) {
        if (t.b(x, g) != 0) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      extendable = true;
      auto next = t.extend(node.elements, x);
      if (seen.insert(next).second) {
        auto gens = node.gens;
        gens.push_back(x);
        queue.push_back({std::move(next), std::move(gens)});
      }
    }
    found.emplace_back(node.elements, !extendable);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<IsotropicSubgroup> out;
  for (const auto& [elements, maximal] : found) {
    IsotropicSubgroup s;
    for (u64 g : canonical_generators(t, elements)) s.generators.push_back(t.to_integer_coords(g));
    s.order = Integer(static_cast<unsigned long long>(elements.size()));
    s.maximal = maximal;
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<FormIsometry> disc_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b,
                                                  std::uint64_t bound) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > Integer(bound)) {
    throw Inconclusive("group order " + to_string(a.order()) + " exceeds enumeration bound " +
                       std::to_string(bound) + "; raise the bound");
  }
  if (a.invariant_factors() != b.invariant_factors()) return std::nullopt;
  if (a.generator_count() == 0) return FormIsometry{{}, std::nullopt};

  if (a.generator_count() == 1 && b.generator_count() == 1) {
    const Integer n = a.orders()[0];
    for (Integer m = 1; m < n; ++m) {
      if (gcd(m, n) != 1) continue;
      if (a.q({m}) == b.q_values()[0]) return FormIsometry{{{mod_inverse(m, n)}}, m};
    }
    return std::nullopt;
  }

  const Integer denom = lcm(common_denominator(a), common_denominator(b));
  const FormTable src(a, bound, denom);
  const FormTable dst(b, bound, denom);

  // q-value multisets are an isometry invariant and prune most mismatches.
  {
    std::vector<i64> qa, qb;
    for (u64 x = 0; x < src.size(); ++x) qa.push_back(src.q(x));
    for (u64 x = 0; x < dst.size(); ++x) qb.push_back(dst.q(x));
    std::sort(qa.begin(), qa.end());
    std::sort(qb.begin(), qb.end());
    if (qa != qb) return std::nullopt;
  }

  const std::size_t k = a.generator_count();
  std::vector<u64> gens_src(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<i64> c(k, 0);
    c[i] = 1;
    gens_src[i] = src.index(c);
  }
  std::vector<std::vector<u64>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const i64 order = to_int64(a.orders()[i]);
    for (u64 y = 0; y < dst.size(); ++y) {
      if (dst.q(y) != src.q(gens_src[i])) continue;
      if (dst.scale(y, order) != 0) continue;
      candidates[i].push_back(y);
    }
  }

  std::vector<u64> chosen;
  std::optional<FormIsometry> result;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) {
      if (dst.span(chosen).size() != dst.size()) return false;
      FormIsometry iso;
      for (u64 y : chosen) iso.images.push_back(dst.to_integer_coords(y));
      result = std::move(iso);
      return true;
    }
    for (u64 y : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = dst.b(y, chosen[j]) == src.b(gens_src[i], gens_src[j]);
      if (!ok) continue;
      chosen.push_back(y);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  search(search, 0);
  return result;
}

bool verify_form_isometry(const DiscriminantForm& a, const DiscriminantForm& b, const FormIsometry& map) {
  const std::size_t k = a.generator_count();
  if (map.images.size() != k) return false;
  if (a.order() != b.order()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& img = map.images[i];
    if (img.size() != b.generator_count()) return false;
    std::vector<Integer> multiple;
    for (const auto& c : img) multiple.push_back(c * a.orders()[i]);
    if (!b.q(multiple).is_zero()) return false;
    for (std::size_t j = 0; j < b.generator_count(); ++j) {
      // n_i * img must be zero in the group, not just q-isotropic.
      if (mod(Rational(multiple[j]) / Rational(b.orders()[j]), Integer(1)) != 0) return false;
    }
    if (b.q(img) != a.q_values()[i]) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (b.b(img, map.images[j]) != a.bilinear()(static_cast<Index>(i), static_cast<Index>(j))) {
        return false;
      }
    }
  }
  if (b.order() > Integer(kDefaultEnumerationBound)) return true;
  const FormTable dst(b, kDefaultEnumerationBound, common_denominator(b));
  std::vector<u64> gens;
  for (const auto& img : map.images) {
    std::vector<i64> c;
    for (std::size_t j = 0; j < img.size(); ++j) c.push_back(to_int64(mod(img[j], b.orders()[j])));
    gens.push_back(dst.index(c));
  }
  return dst.span(gens).size() == dst.size();
}

// ---------------------------------------------------------- sublattices

Character pairing_character(const GramLattice& l, const IntVector& gamma, const Integer& n) {
  if (gamma.size() != l.rank()) throw InvalidInput("pairing_character: vector length");
  if (n < 2) throw InvalidInput("pairing_character: modulus must be at least 2");
  const IntVector g = l.gram() * gamma;
  Character chi{{}, n};
  for (Index i = 0; i < g.size(); ++i) chi.values.push_back(mod(g(i), n));
  return chi;
}

Sublattice kernel_sublattice(const GramLattice& l, const Character& chi) {
  const Index r = l.rank();
  if (static_cast<Index>(chi.values.size()) != r) throw InvalidInput("character length differs from rank");
  if (chi.modulus < 2) throw InvalidInput("character modulus must be at least 2");
  IntMatrix row(1, r + 1);
  Integer g = chi.modulus;
  for (Index i = 0; i < r; ++i) {
    row(0, i) = mod(chi.values[static_cast<std::size_t>(i)], chi.modulus);
    g = gcd(g, row(0, i));
  }
  if (g == chi.modulus) throw InvalidInput("character vanishes identically");
  row(0, r) = chi.modulus;
  const IntMatrix ker = integer_kernel(row);  // (r + 1) x r
  const IntMatrix basis = canonical_basis(ker.topRows(r));
  GramLattice sub(basis.transpose() * l.gram() * basis);
  return {basis, std::move(sub), chi.modulus / g};
}

Sublattice orthogonal_complement(const GramLattice& ambient, const IntMatrix& sub_basis) {
  if (sub_basis.rows() != ambient.rank()) throw InvalidInput("sub_basis has the wrong ambient rank");
  if (rank(sub_basis) != sub_basis.cols()) throw InvalidInput("sub_basis vectors are linearly dependent");
  const IntMatrix constraints = sub_basis.transpose() * ambient.gram();
  const IntMatrix basis = integer_kernel(constraints);
  GramLattice complement(basis.transpose() * ambient.gram() * basis);
  return {basis, std::move(complement), sub_basis.cols() == 0 ? Integer(1) : Integer(0)};
}

}  // namespace k3
