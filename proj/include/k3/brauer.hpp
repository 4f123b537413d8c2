#pragma once

// Two-torsion Brauer classes on K3 surfaces: the mod 2 quadratic form of an
// even lattice, the classification of index two sublattices of
// T_{2d} = <-2d> + U^2 + E8(-1)^2, and the rank of Br_2 for double covers.

#include "k3/exactnum.hpp"
#include "k3/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3 {

/// gamma -> <gamma, gamma>/2 mod 2 on L/2L. Row i of the upper triangular
/// bit matrix holds Q_ii in bit i and Q_ij (j > i) in bit j; a vector is a
/// bitmask with coordinate i in bit i.
class F2Form {
 public:
  static constexpr int kMaxDimension = 32;

  F2Form() = default;
  explicit F2Form(std::vector<std::uint32_t> rows);
  /// Rejects odd lattices.
  static F2Form from_gram(const GramLattice& l);

  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  int operator()(std::uint32_t v) const;
  /// B(u, v) = q(u + v) - q(u) - q(v).
  int polar(std::uint32_t u, std::uint32_t v) const;

 private:
  std::vector<std::uint32_t> rows_;
};

inline constexpr int kMaxCountDimension = 24;

/// Zeros of q over all of F_2^dim, 0 included. Refuses dim > 24.
std::uint64_t count_f2_zeros(const F2Form& f);

/// alpha(n v + l) = a n + <lambda, l> mod 2 on T_{2d}; lambda is a class in
/// Lambda'/2Lambda' with coordinate i in bit i, basis order U, U, E8(-1),
/// E8(-1).
struct BrauerElement {
  Integer d;
  int a = 0;
  std::uint32_t lambda = 0;

  bool is_zero() const { return a == 0 && lambda == 0; }
};

inline constexpr int kLambdaPrimeRank = 20;

/// 20 characters of 0/1.
std::uint32_t parse_lambda(std::string_view bits);
std::string lambda_to_string(std::uint32_t lambda);

/// Its character on T_{2d} (coordinates: v, then Lambda').
Character brauer_character(const BrauerElement& e);

struct BrauerClass {
  /// Invariant factors of the discriminant group of ker(alpha).
  std::vector<Integer> group;
  /// For a = 1 and d odd: whether (1/2)<lambda, lambda> is even.
  std::optional<bool> even;
  /// The discriminant form the classification predicts for ker(alpha).
  DiscriminantForm predicted;
};

BrauerClass brauer2_class(const BrauerElement& e);

/// discriminant_form(kernel_sublattice(T_{2d}, alpha)), computed directly.
DiscriminantForm brauer_kernel_form(const BrauerElement& e);

struct BrauerCensus {
  Integer d;
  std::uint64_t a0 = 0;
  /// d even: the single a = 1 class; d odd: the even class.
  std::uint64_t a1_even = 0;
  /// d odd only.
  std::optional<std::uint64_t> a1_odd;

  std::uint64_t total() const { return a0 + a1_even + a1_odd.value_or(0); }
};

/// Class sizes over the 2^21 - 1 nonzero elements, from an exhaustive zero
/// count of the form of Lambda'.
BrauerCensus brauer2_census(const Integer& d);

/// Smallest x in [0, 16d) with x^2 = 1 - 4d mod 16d.
std::optional<Integer> square_solvable(const Integer& d);

bool primitive_embedding_exists(const BrauerElement& e);

struct BrauerRankInputs {
  Integer b2_y;
  Integer b0_c;
  Integer rho;
};

/// n = 2(1 + b2(Y) - b0(C)) - rho; rejects a negative n.
Integer brauer_rank(const BrauerRankInputs& in);

}  // namespace k3
