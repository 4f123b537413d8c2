#include "k3/brauer.hpp"

#include "k3/normal_form.hpp"

#include <bit>

namespace k3 {

F2Form::F2Form(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw InvalidInput("F2 form dimension must lie in [1, 32]");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t below = (std::uint64_t{1} << i) - 1;
    const std::uint64_t beyond = rows_.size() >= 32 ? 0 : ~((std::uint64_t{1} << rows_.size()) - 1);
    if ((rows_[i] & below) != 0 || (rows_[i] & beyond) != 0) {
      throw InvalidInput("F2 form rows must be upper triangular");
    }
  }
}

F2Form F2Form::from_gram(const GramLattice& l) {
  if (!l.is_even()) throw InvalidInput("the mod 2 form needs an even lattice");
  const Index n = l.rank();
  if (n < 1 || n > kMaxDimension) throw InvalidInput("F2 form dimension must lie in [1, 32]");
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    if (mod(l.gram()(i, i) / 2, Integer(2)) != 0) rows[static_cast<std::size_t>(i)] |= 1u << i;
    for (Index j = i + 1; j < n; ++j)
      if (mod(l.gram()(i, j), Integer(2)) != 0) rows[static_cast<std::size_t>(i)] |= 1u << j;
  }
  return F2Form(std::move(rows));
}

int F2Form::operator()(std::uint32_t v) const {
  int parity = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((v >> i) & 1u) parity ^= std::popcount(rows_[i] & v) & 1;
  return parity;
}

int F2Form::polar(std::uint32_t u, std::uint32_t v) const {
  return (*this)(u ^ v) ^ (*this)(u) ^ (*this)(v);
}

std::uint64_t count_f2_zeros(const F2Form& f) {
  if (f.dimension() > kMaxCountDimension) throw InvalidInput("zero count refused above dimension 24");
  const std::uint64_t size = std::uint64_t{1} << f.dimension();
  std::uint64_t zeros = 0;
  for (std::uint64_t v = 0; v < size; ++v) zeros += f(static_cast<std::uint32_t>(v)) == 0;
  return zeros;
}

// ----------------------------------------------------------- Brauer classes

std::uint32_t parse_lambda(std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(kLambdaPrimeRank)) {
    throw InvalidInput("lambda must have 20 binary digits");
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') out |= 1u << i;
    else if (bits[i] != '0') throw InvalidInput("lambda must consist of 0 and 1");
  }
  return out;
}

std::string lambda_to_string(std::uint32_t lambda) {
  std::string s(kLambdaPrimeRank, '0');
  for (int i = 0; i < kLambdaPrimeRank; ++i)
    if ((lambda >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

namespace {

void require_valid(const BrauerElement& e) {
  if (e.d <= 0) throw InvalidInput("d must be positive");
  if (e.a != 0 && e.a != 1) throw InvalidInput("a must be 0 or 1");
  if (e.lambda >> kLambdaPrimeRank) throw InvalidInput("lambda has more than 20 bits");
  if (e.is_zero()) throw InvalidInput("the zero class has no kernel of index two");
}

IntVector lambda_lift(std::uint32_t lambda) {
  IntVector v = IntVector::Zero(kLambdaPrimeRank);
  for (int i = 0; i < kLambdaPrimeRank; ++i)
    if ((lambda >> i) & 1u) v(i) = 1;
  return v;
}

}  // namespace

Character brauer_character(const BrauerElement& e) {
  require_valid(e);
  const IntVector g = lambda_prime().gram() * lambda_lift(e.lambda);
  Character chi{{Integer(e.a)}, Integer(2)};
  for (Index i = 0; i < g.size(); ++i) chi.values.push_back(mod(g(i), Integer(2)));
  return chi;
}

BrauerClass brauer2_class(const BrauerElement& e) {
  require_valid(e);
  BrauerClass out;
  if (e.a == 0) {
    IntMatrix diag = IntMatrix::Zero(3, 3);
    diag(0, 0) = 2 * e.d;
    diag(1, 1) = 2;
    diag(2, 2) = 2;
    for (const auto& f : smith_normal_form(diag).diagonal())
      if (f > 1) out.group.push_back(f);
    // ker(alpha) = <-2d> + ker(alpha on Lambda'); the second summand has the
    // form of U(2) when (1/2)<lambda, lambda> is even and of <2> + <-2> if odd.
    const bool even_lambda = F2Form::from_gram(lambda_prime())(e.lambda) == 0;
    const auto rest = even_lambda ? discriminant_form(scaled(hyperbolic_plane(), 2))
                                  : discriminant_form(direct_sum({rank_one(2), rank_one(-2)}));
    out.predicted = orthogonal_sum(discriminant_form(rank_one(-2 * e.d)), rest);
    return out;
  }
  out.group = {8 * e.d};
  const int half_square = F2Form::from_gram(lambda_prime())(e.lambda);
  if (mod(e.d, Integer(2)) == 1) out.even = half_square == 0;
  // q(u) = (-1 + 2d <lambda, lambda>) / 8d for u = (-v, 2d lambda) / 4d.
  const IntVector lift = lambda_lift(e.lambda);
  const Integer lambda_sq = lambda_prime().inner(lift, lift);
  out.predicted = DiscriminantForm::cyclic(8 * e.d, QMod2Z(make_rational(-1 + 2 * e.d * lambda_sq, 8 * e.d)));
  return out;
}

DiscriminantForm brauer_kernel_form(const BrauerElement& e) {
  return discriminant_form(kernel_sublattice(transcendental_rank_one_k3(e.d), brauer_character(e)).lattice);
}

BrauerCensus brauer2_census(const Integer& d) {
  if (d <= 0) throw InvalidInput("d must be positive");
  const std::uint64_t all = std::uint64_t{1} << kLambdaPrimeRank;
  BrauerCensus out;
  out.d = d;
  out.a0 = all - 1;
  if (mod(d, Integer(2)) == 0) {
    out.a1_even = all;
  } else {
    out.a1_even = count_f2_zeros(F2Form::from_gram(lambda_prime()));
    out.a1_odd = all - out.a1_even;
  }
  return out;
}

std::optional<Integer> square_solvable(const Integer& d) {
  if (d <= 0) throw InvalidInput("d must be positive");
  const Integer m = 16 * d;
  const Integer target = mod(1 - 4 * d, m);
  for (Integer x = 0; x < m; ++x)
    if (mod(x * x, m) == target) return x;
  return std::nullopt;
}

bool primitive_embedding_exists(const BrauerElement& e) {
  require_valid(e);
  if (e.a == 0) return false;
  if (mod(e.d, Integer(2)) == 0) return true;
  return F2Form::from_gram(lambda_prime())(e.lambda) == 0;
}

Integer brauer_rank(const BrauerRankInputs& in) {
  if (in.b2_y < 0 || in.b0_c < 0) throw InvalidInput("Betti numbers must be non-negative");
  if (in.rho < 1) throw InvalidInput("the Picard rank is at least 1");
  const Integer n = 2 * (1 + in.b2_y - in.b0_c) - in.rho;
  if (n < 0) throw InvalidInput("inputs are inconsistent with a K3 double cover (negative rank)");
  return n;
}

}  // namespace k3
