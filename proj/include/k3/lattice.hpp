#pragma once

// Integer lattices given by symmetric Gram matrices, their discriminant
// forms, and the sublattice constructions built on them.

#include "k3/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3 {

struct Signature {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Free Z-module Z^r with the bilinear form <x, y> = x^T G y.
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMatrix gram);

  Index rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  bool is_even() const;
  Integer determinant() const;
  bool is_nondegenerate() const { return determinant() != 0; }
  /// Counted from pivot signs of an exact rational congruence diagonalization.
  Signature signature() const;

  Integer inner(const IntVector& x, const IntVector& y) const;
  Rational inner(const RatVector& x, const RatVector& y) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
};

GramLattice direct_sum(const std::vector<GramLattice>& parts);
/// L(k): the same module with the form multiplied by k.
GramLattice scaled(const GramLattice& l, const Integer& k);

// Named lattices.
GramLattice hyperbolic_plane();
/// The negative definite E8 root lattice, E8(-1).
GramLattice e8_negative();
/// U^3 + E8(-1)^2, rank 22.
GramLattice k3_lattice();
/// U^2 + E8(-1)^2, rank 20 (the same Gram matrix as Gamma).
GramLattice lambda_prime();
GramLattice gamma_lattice();
/// <n>, rank one.
GramLattice rank_one(const Integer& n);
/// Gram (0, b, 2c) = [[0, b], [b, 2c]].
GramLattice lambda_bc(const Integer& b, const Integer& c);
/// lambda_bc(b, c) + U + E8(-1)^2, rank 20.
GramLattice gamma_bc(const Integer& b, const Integer& c);
/// <-2d> + U^2 + E8(-1)^2, rank 21.
GramLattice transcendental_rank_one_k3(const Integer& d);

enum class LatticeName { U, E8_MINUS_1, LAMBDA_K3, LAMBDA_PRIME, RANK1, LAMBDA_BC, GAMMA_BC, GAMMA };

/// RANK1 takes n = first (the lattice <n>); LAMBDA_BC and GAMMA_BC take (b, c).
GramLattice standard_lattice(LatticeName name, const Integer& first = 0, const Integer& second = 0);
std::optional<LatticeName> parse_lattice_name(std::string_view text);
std::string to_string(LatticeName name);

/// Finite abelian group  (+) Z/n_i  with a Q/2Z-valued quadratic form q and
/// the associated Q/Z-valued bilinear form b on the generators.
///
/// q of an element sum c_i g_i is  sum c_i^2 q_i + 2 sum_{i<j} c_i c_j b_ij.
class DiscriminantForm {
 public:
  DiscriminantForm() = default;
  DiscriminantForm(std::vector<Integer> orders, std::vector<QMod2Z> q_values, RatMatrix bilinear,
                   std::vector<RatVector> generator_lifts = {});

  static DiscriminantForm cyclic(const Integer& order, const QMod2Z& q);

  const std::vector<Integer>& orders() const { return orders_; }
  const std::vector<QMod2Z>& q_values() const { return q_; }
  /// Entries reduced into [0, 1).
  const RatMatrix& bilinear() const { return b_; }
  /// Generator lifts in L (x) Q, in the lattice's coordinates; empty for
  /// abstractly constructed forms.
  const std::vector<RatVector>& generator_lifts() const { return lifts_; }

  std::size_t generator_count() const { return orders_.size(); }
  Integer order() const;
  /// Invariant factors d1 | d2 | ... of the group (entries > 1).
  std::vector<Integer> invariant_factors() const;

  QMod2Z q(const std::vector<Integer>& coords) const;
  /// b(x, y) in [0, 1).
  Rational b(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

  DiscriminantForm negated() const;

 private:
  std::vector<Integer> orders_;
  std::vector<QMod2Z> q_;
  RatMatrix b_;
  std::vector<RatVector> lifts_;
};

/// L^* / L with q(x + L) = <x, x> mod 2Z, generators read off the Smith
/// normal form of the Gram matrix. Requires an even nondegenerate lattice.
DiscriminantForm discriminant_form(const GramLattice& l);

DiscriminantForm orthogonal_sum(const DiscriminantForm& a, const DiscriminantForm& b);

/// Default cap on group orders for exhaustive enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

struct IsotropicSubgroup {
  /// Generators as coordinate vectors over the form's generators.
  std::vector<std::vector<Integer>> generators;
  Integer order;
  bool maximal = false;
};

/// Every subgroup (the trivial one included) on which q vanishes, sorted by
/// order and then by element set. Throws Inconclusive above `bound`.
std::vector<IsotropicSubgroup> isotropic_subgroups(const DiscriminantForm& d,
                                                   std::uint64_t bound = kDefaultEnumerationBound);

/// A q-preserving group isomorphism, given by the images of the source
/// generators in the target's coordinates.
struct FormIsometry {
  std::vector<std::vector<Integer>> images;
  /// Set by the cyclic fast path: the inverse map sends the target
  /// generator g' to a * g.
  std::optional<Integer> multiplier;
};

/// Exhaustive search over generator images; nullopt is a definitive "no".
/// Throws Inconclusive when either group exceeds `bound`.
std::optional<FormIsometry> disc_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b,
                                                  std::uint64_t bound = kDefaultEnumerationBound);

/// Checks that `map` is a bijective q-preserving homomorphism a -> b.
bool verify_form_isometry(const DiscriminantForm& a, const DiscriminantForm& b, const FormIsometry& map);

/// Homomorphism Z^r -> Z/nZ given by its values on the standard basis.
struct Character {
  std::vector<Integer> values;
  Integer modulus;
};

/// x -> <x, gamma> mod n.
Character pairing_character(const GramLattice& l, const IntVector& gamma, const Integer& n);

struct Sublattice {
  /// Basis vectors as columns, in ambient coordinates, Hermite-canonical.
  IntMatrix basis;
  /// Restricted form B^T G B.
  GramLattice lattice;
  /// Index in the ambient lattice (zero when the rank drops).
  Integer index;
};

/// ker(chi). Rejects characters that vanish identically.
Sublattice kernel_sublattice(const GramLattice& l, const Character& chi);

/// {v : <v, s> = 0 for all columns s of sub_basis}; primitive by
/// construction. Rejects linearly dependent sub_basis.
Sublattice orthogonal_complement(const GramLattice& ambient, const IntMatrix& sub_basis);

}  // namespace k3
