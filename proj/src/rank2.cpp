#include "k3/rank2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace k3 {

Rank2Params Rank2Params::canonical(const Integer& b, const Integer& c) {
  if (b == 0) throw InvalidInput("b must be nonzero");
  const Integer ab = abs(b);
  return {ab, mod(c, ab)};
}

IntMatrix lambda_gram(const Rank2Params& p) {
  IntMatrix g(2, 2);
  g << Integer(0), p.b, p.b, Integer(2) * p.c;
  return g;
}

bool is_gl2_witness(const IntMatrix& g1, const IntMatrix& g2, const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) return false;
  if (abs(determinant(a)) != 1) return false;
  return a.transpose() * g1 * a == g2;
}

// ------------------------------------------------------------ GL(2,Z) oracle

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct Form {
  i64 a, b, c;  // a x^2 + 2 b x y + c y^2

  i128 q(i64 x, i64 y) const {
    return static_cast<i128>(a) * x * x + 2 * static_cast<i128>(b) * x * y + static_cast<i128>(c) * y * y;
  }
  i128 pair(i64 x1, i64 y1, i64 x2, i64 y2) const {
    return static_cast<i128>(a) * x1 * x2 + static_cast<i128>(b) * (static_cast<i128>(x1) * y2 + static_cast<i128>(y1) * x2) +
           static_cast<i128>(c) * y1 * y2;
  }
};

Form small_form(const IntMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2 || g(0, 1) != g(1, 0)) {
    throw InvalidInput("the oracle takes symmetric 2x2 Gram matrices");
  }
  const Integer limit = Integer(1) << 24;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      if (abs(g(i, j)) >= limit) throw InvalidInput("Gram entry too large for the oracle");
  return {to_int64(g(0, 0)), to_int64(g(0, 1)), to_int64(g(1, 1))};
}

bool exact_sqrt(i128 n, i128& r) {
  if (n < 0) return false;
  r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Candidate {
  std::array<i64, 4> m;  // row-major
  i64 size;
  // Ties prefer larger leading entries, so the identity beats -I.
  bool operator<(const Candidate& o) const { return size != o.size ? size < o.size : m > o.m; }
};

class Gl2Search {
 public:
  Gl2Search(const IntMatrix& g1, const IntMatrix& g2, long bound, bool all)
      : f_(small_form(g1)), bound_(bound), all_(all) {
    const Form t = small_form(g2);
    n00_ = t.a;
    n01_ = t.b;
    n11_ = t.c;
    if (bound < 0 || bound > 10'000'000) throw InvalidInput("oracle bound must lie in [0, 10^7]");
  }

  std::vector<Candidate> run() {
    for (i64 k = 0; k <= bound_; ++k) {
      if (!all_ && !found_.empty() && k > found_.front().size) break;
      first_column(k);
      if (k != 0) first_column(-k);
    }
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  void first_column(i64 x) {
    if (f_.c != 0) {
      const i128 disc = static_cast<i128>(f_.b) * f_.b * x * x - static_cast<i128>(f_.c) * (static_cast<i128>(f_.a) * x * x - n00_);
      i128 r;
      if (!exact_sqrt(disc, r)) return;
      for (int s : {1, -1}) {
        if (s == -1 && r == 0) break;
        const i128 num = -static_cast<i128>(f_.b) * x + s * r;
        if (num % f_.c == 0) try_column(x, num / f_.c);
      }
    } else if (f_.b != 0) {
      if (x != 0) {
        const i128 rhs = n00_ - static_cast<i128>(f_.a) * x * x;
        const i128 den = 2 * static_cast<i128>(f_.b) * x;
        if (rhs % den == 0) try_column(x, rhs / den);
      } else if (n00_ == 0) {
        for (i64 y = -bound_; y <= bound_; ++y) try_column(x, y);
      }
    } else if (static_cast<i128>(f_.a) * x * x == n00_) {
      for (i64 y = -bound_; y <= bound_; ++y) try_column(x, y);
    }
  }

  void try_column(i64 x, i128 y128) {
    if (y128 > bound_ || y128 < -bound_) return;
    const i64 y = static_cast<i64>(y128);
    if (std::gcd(x, y) != 1) return;
    // p x + q y = 1, so (-q, p) completes (x, y) to determinant 1.
    i64 p = 1, q = 0, r0 = x, p1 = 0, q1 = 1, r1 = y;
    while (r1 != 0) {
      const i64 t = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
      std::tie(p, p1) = std::make_pair(p1, p - t * p1);
      std::tie(q, q1) = std::make_pair(q1, q - t * q1);
    }
    if (r0 < 0) {
      p = -p;
      q = -q;
    }
    for (int s : {1, -1}) second_column(x, y, -q * s, p * s);
  }

  void second_column(i64 x, i64 y, i64 x0, i64 y0) {
    const i128 l0 = f_.pair(x, y, x0, y0);
    const i128 q0 = f_.q(x0, y0);
    if (n00_ != 0) {
      const i128 num = n01_ - l0;
      if (num % n00_ != 0) return;
      accept(x, y, x0, y0, num / n00_);
      return;
    }
    if (l0 != n01_) return;
    if (l0 != 0) {
      const i128 num = n11_ - q0;
      if (num % (2 * l0) != 0) return;
      accept(x, y, x0, y0, num / (2 * l0));
      return;
    }
    if (q0 != n11_) return;
    // Every t works; keep the ones inside the box.
    i128 lo = -(static_cast<i128>(1) << 62), hi = static_cast<i128>(1) << 62;
    for (auto [v, d] : {std::pair<i64, i64>{x0, x}, {y0, y}}) {
      if (d == 0) continue;
      const i128 from = d > 0 ? -bound_ - v : bound_ - v;
      const i128 to = d > 0 ? bound_ - v : -bound_ - v;
      lo = std::max(lo, -floor_div128(-from, d));
      hi = std::min(hi, floor_div128(to, d));
    }
    for (i128 t = lo; t <= hi; ++t) accept(x, y, x0, y0, t);
  }

  void accept(i64 x, i64 y, i64 x0, i64 y0, i128 t) {
    const i128 ax = x0 + t * x;
    const i128 ay = y0 + t * y;
    if (ax > bound_ || ax < -bound_ || ay > bound_ || ay < -bound_) return;
    if (f_.q(static_cast<i64>(ax), static_cast<i64>(ay)) != n11_) return;
    if (f_.pair(x, y, static_cast<i64>(ax), static_cast<i64>(ay)) != n01_) return;
    Candidate c{{x, static_cast<i64>(ax), y, static_cast<i64>(ay)}, 0};
    for (i64 v : c.m) c.size = std::max(c.size, std::abs(v));
    if (all_) {
      found_.push_back(c);
    } else if (found_.empty() || c < found_.front()) {
      found_.assign(1, c);
    }
  }

  Form f_;
  i64 n00_ = 0, n01_ = 0, n11_ = 0;
  i64 bound_;
  bool all_;
  std::vector<Candidate> found_;
};

IntMatrix to_matrix(const Candidate& c) {
  IntMatrix a(2, 2);
  a << Integer(c.m[0]), Integer(c.m[1]), Integer(c.m[2]), Integer(c.m[3]);
  return a;
}

bool is_zero_matrix(const IntMatrix& g) {
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0) return false;
  return true;
}

}  // namespace

std::optional<IntMatrix> gl2_isometry_oracle(const IntMatrix& g1, const IntMatrix& g2, long bound) {
  small_form(g1);
  small_form(g2);
  if (is_zero_matrix(g1)) {
    if (is_zero_matrix(g2) && bound >= 1) return identity_matrix(2);
    return std::nullopt;
  }
  const auto found = Gl2Search(g1, g2, bound, false).run();
  if (found.empty()) return std::nullopt;
  return to_matrix(found.front());
}

std::vector<IntMatrix> gl2_isometries(const IntMatrix& g1, const IntMatrix& g2, long bound) {
  if (is_zero_matrix(g1)) throw InvalidInput("the zero form has every matrix as an isometry");
  std::vector<IntMatrix> out;
  for (const auto& c : Gl2Search(g1, g2, bound, true).run()) out.push_back(to_matrix(c));
  return out;
}

// --------------------------------------------------------------- isometry

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ISOMETRIC: return "ISOMETRIC";
    case Verdict::NOT_ISOMETRIC: return "NOT_ISOMETRIC";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

IsometryResult lambda_isometric(const Rank2Params& p0, const Rank2Params& q0, const SearchBounds& bounds) {
  const Rank2Params p = Rank2Params::canonical(p0.b, p0.c);
  const Rank2Params q = Rank2Params::canonical(q0.b, q0.c);
  if (p.b != q.b) return {Verdict::NOT_ISOMETRIC, std::nullopt, "determinant"};
  if (p.c == q.c) return {Verdict::ISOMETRIC, identity_matrix(2), "identity"};

  const Integer& b = p.b;
  const IntMatrix g1 = lambda_gram(p);
  const IntMatrix g2 = lambda_gram(q);
  if (gcd(b, p.c) == 1 && gcd(b, q.c) == 1) {
    if (mod(p.c * q.c, b) != 1) return {Verdict::NOT_ISOMETRIC, std::nullopt, "closed_form"};
    const Integer e = (p.c * q.c - 1) / b;
    IntMatrix a(2, 2);
    a << -p.c, -e, b, q.c;
    if (!is_gl2_witness(g1, g2, a)) throw std::logic_error("closed-form witness failed verification");
    return {Verdict::ISOMETRIC, a, "closed_form"};
  }

  if (auto a = gl2_isometry_oracle(g1, g2, bounds.oracle)) return {Verdict::ISOMETRIC, *a, "oracle"};
  try {
    const auto da = discriminant_form(GramLattice(g1));
    const auto db = discriminant_form(GramLattice(g2));
    if (!disc_forms_isomorphic(da, db, bounds.enumeration)) {
      return {Verdict::NOT_ISOMETRIC, std::nullopt, "discriminant_form"};
    }
  } catch (const Inconclusive&) {
    return {Verdict::INCONCLUSIVE, std::nullopt, "bound"};
  }
  return {Verdict::INCONCLUSIVE, std::nullopt, "oracle"};
}

bool gamma_isometric(const Rank2Params& p0, const Rank2Params& q0, std::uint64_t bound) {
  const Rank2Params p = Rank2Params::canonical(p0.b, p0.c);
  const Rank2Params q = Rank2Params::canonical(q0.b, q0.c);
  if (p.b != q.b) return false;
  // U + E8(-1)^2 is unimodular, so Gamma_{b,c} and Lambda_{b,c} share a form.
  const auto da = discriminant_form(lambda_bc(p.b, p.c));
  const auto db = discriminant_form(lambda_bc(q.b, q.c));
  return disc_forms_isomorphic(da, db, bound).has_value();
}

std::vector<std::vector<Integer>> gamma_class_census(const Integer& b, std::uint64_t bound) {
  if (b <= 2 || !is_prime(b)) throw InvalidInput("census requires an odd prime b");
  const i64 n = to_int64(b);
  std::vector<i64> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](i64 v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (i64 c = 0; c < n; ++c) {
    for (i64 d = c + 1; d < n; ++d) {
      if (find(c) == find(d)) continue;
      if (gamma_isometric({b, Integer(c)}, {b, Integer(d)}, bound)) {
        parent[static_cast<std::size_t>(find(d))] = find(c);
      }
    }
  }
  std::vector<std::vector<Integer>> classes;
  std::vector<i64> slot(static_cast<std::size_t>(n), -1);
  for (i64 c = 0; c < n; ++c) {
    const i64 root = find(c);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<i64>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].emplace_back(c);
  }
  return classes;
}

// ------------------------------------------------------ cones, fibrations

namespace {

void require_canonical(const Rank2Params& p) {
  if (!p.is_canonical()) throw InvalidInput("expected b > 0 and 0 <= c < b");
}

}  // namespace

ConeData kahler_cone(const Rank2Params& p) {
  require_canonical(p);
  ConeData out;
  // v^2 = 2y(bx + cy) = -2 forces y = +-1 and bx + cy = -+1; keep y > 0.
  const Integer num = -1 - p.c;
  if (mod(num, p.b) == 0) out.neg2_curves.push_back(int_vector({0, 1}));
  for (auto& v : out.neg2_curves) v(0) = num / p.b;

  out.covectors.push_back(int_vector({0, 1}));
  if (out.neg2_curves.empty()) {
    IntVector w(2);
    w << p.b, p.c;
    out.covectors.push_back(w);
  } else {
    // The wall orthogonal to the (-2)-curve: w = G n.
    out.covectors.push_back(lambda_gram(p) * out.neg2_curves.front());
  }
  out.fibrations = fibration_classes(p);
  return out;
}

std::vector<IntVector> fibration_classes(const Rank2Params& p) {
  require_canonical(p);
  std::vector<IntVector> out{int_vector({1, 0})};
  if (p.c == p.b - 1) return out;
  const Integer d = gcd(p.b, p.c);
  IntVector e2(2);
  e2 << -(p.c / d), p.b / d;
  out.push_back(e2);
  return out;
}

std::string to_string(OrthogonalGroup g) { return g == OrthogonalGroup::PM_I ? "PM_I" : "PM_I_AND_J"; }
std::string to_string(K3Automorphisms a) { return a == K3Automorphisms::TRIVIAL ? "TRIVIAL" : "Z2"; }

AutResult automorphisms(const Rank2Params& p) {
  require_canonical(p);
  AutResult out;
  const Integer d = gcd(p.b, p.c);
  const Integer b1 = p.b / d;
  const Integer c1 = p.c / d;
  if (p.c == 0) {
    out.orthogonal_group = OrthogonalGroup::PM_I_AND_J;
    out.j = int_matrix({{0, 1}, {1, 0}});
  } else if (mod(c1 * c1, b1) == mod(Integer(1), b1)) {
    out.orthogonal_group = OrthogonalGroup::PM_I_AND_J;
    const Integer e = (c1 * c1 - 1) / b1;
    IntMatrix j(2, 2);
    j << -c1, -e, b1, c1;
    out.j = j;
  }
  const bool z2 = (p.b == 1 && p.c == 0) || (p.b == 2 && p.c == 0) || (p.b > 2 && p.c == 1);
  out.k3_automorphisms = z2 ? K3Automorphisms::Z2 : K3Automorphisms::TRIVIAL;
  return out;
}

int FmPartnerCount::fibration_total() const {
  int total = 0;
  for (const auto& c : classes) total += c.fibrations;
  return total;
}

FmPartnerCount fm_partner_count(const Integer& b) {
  if (!is_prime(b) || mod(b, Integer(4)) != 1) throw InvalidInput("requires a prime b = 1 mod 4");
  FmPartnerCount out{b, {}};
  std::vector<Integer> reps;
  const Integer half = (b - 1) / 2;
  for (Integer a = 1; a <= half; ++a) {
    const Integer c = mod(-a * a, b);
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
      const auto r = lambda_isometric({b, reps[k]}, {b, c});
      if (r.verdict == Verdict::INCONCLUSIVE) throw Inconclusive("undecided candidate pair");
      if (r.verdict == Verdict::ISOMETRIC) {
        out.classes[k].members.push_back(c);
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(c);
      out.classes.push_back({{c}, 0});
    }
  }
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const Rank2Params p{b, reps[k]};
    const auto fib = fibration_classes(p);
    int count = static_cast<int>(fib.size());
    if (count == 2 && automorphisms(p).k3_automorphisms == K3Automorphisms::Z2) count = 1;
    out.classes[k].fibrations = count;
    std::sort(out.classes[k].members.begin(), out.classes[k].members.end());
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const FmClass& x, const FmClass& y) { return x.members.front() < y.members.front(); });
  return out;
}

bool jacobian_unique(const Rank2Params& p, std::uint64_t bound) {
  require_canonical(p);
  const bool coprime = gcd(p.b, 2 * p.c) == 1 && p.c < p.b - 1;
  const bool two_zero = p.b == 2 && p.c == 0;
  if (!coprime && !two_zero) throw InvalidInput("requires gcd(b, 2c) = 1 and c < b - 1, or (b, c) = (2, 0)");
  const auto subs = isotropic_subgroups(discriminant_form(gamma_bc(p.b, p.c)), bound);
  int count = 0;
  for (const auto& s : subs) count += s.maximal && s.order == p.b;
  return count == 1;
}

}  // namespace k3
