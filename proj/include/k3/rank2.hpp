#pragma once

// The rank-two lattices Lambda_{b,c} = (0, b, 2c) and Gamma_{b,c}: isometry
// tests, Kahler cones, automorphisms and genus-one fibration counts.

#include "k3/exactnum.hpp"
#include "k3/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3 {

/// Default entry bound for the GL(2, Z) search.
inline constexpr long kDefaultOracleBound = 10'000;

/// The pair (b, c). canonical() applies Lambda_{b,c} = Lambda_{-b,c} =
/// Lambda_{b,c-nb}, giving b > 0 and 0 <= c < b.
struct Rank2Params {
  Integer b;
  Integer c;

  static Rank2Params canonical(const Integer& b, const Integer& c);
  bool is_canonical() const { return b > 0 && c >= 0 && c < b; }
  friend bool operator==(const Rank2Params&, const Rank2Params&) = default;
};

IntMatrix lambda_gram(const Rank2Params& p);

/// Searches A in GL(2, Z) with |entries| <= bound and A^T g1 A = g2.
/// Candidates are ordered by max |entry| and then by descending row-major
/// entries; the first one is returned. nullopt only means "none up to
/// bound". Gram entries must stay below 2^24 in absolute value.
std::optional<IntMatrix> gl2_isometry_oracle(const IntMatrix& g1, const IntMatrix& g2,
                                             long bound = kDefaultOracleBound);

/// Every such A up to `bound`, in the same order.
std::vector<IntMatrix> gl2_isometries(const IntMatrix& g1, const IntMatrix& g2,
                                      long bound = kDefaultOracleBound);

/// A^T g1 A == g2 and det A = +-1.
bool is_gl2_witness(const IntMatrix& g1, const IntMatrix& g2, const IntMatrix& a);

enum class Verdict { ISOMETRIC, NOT_ISOMETRIC, INCONCLUSIVE };
std::string to_string(Verdict v);

struct IsometryResult {
  Verdict verdict = Verdict::INCONCLUSIVE;
  /// A with A^T Lambda_p A = Lambda_q, in the canonical coordinates.
  std::optional<IntMatrix> witness;
  /// "determinant", "identity", "closed_form", "oracle", "discriminant_form"
  /// or "bound".
  std::string method;
};

struct SearchBounds {
  long oracle = kDefaultOracleBound;
  std::uint64_t enumeration = kDefaultEnumerationBound;
};

/// For gcd(b, c) = gcd(b, d) = 1 the criterion c = d or cd = 1 mod b decides
/// the question; otherwise the oracle looks for a witness and discriminant
/// forms can refute. Anything else is INCONCLUSIVE.
IsometryResult lambda_isometric(const Rank2Params& p, const Rank2Params& q, const SearchBounds& bounds = {});

/// Gamma_{b,c} vs Gamma_{b',d} by discriminant forms. Throws Inconclusive
/// when the form search exceeds its bound.
bool gamma_isometric(const Rank2Params& p, const Rank2Params& q,
                     std::uint64_t bound = kDefaultEnumerationBound);

/// Isometry classes of Gamma_{b,c}, 0 <= c < b, for an odd prime b. Classes
/// are sorted by their smallest member.
std::vector<std::vector<Integer>> gamma_class_census(const Integer& b,
                                                     std::uint64_t bound = kDefaultEnumerationBound);

struct ConeData {
  /// The cone is {v : w . v > 0 for every covector w}.
  std::vector<IntVector> covectors;
  /// Effective (-2)-classes.
  std::vector<IntVector> neg2_curves;
  /// Primitive isotropic classes on the boundary of the cone.
  std::vector<IntVector> fibrations;
};

ConeData kahler_cone(const Rank2Params& p);
std::vector<IntVector> fibration_classes(const Rank2Params& p);

enum class OrthogonalGroup { PM_I, PM_I_AND_J };
enum class K3Automorphisms { TRIVIAL, Z2 };
std::string to_string(OrthogonalGroup g);
std::string to_string(K3Automorphisms a);

struct AutResult {
  OrthogonalGroup orthogonal_group = OrthogonalGroup::PM_I;
  K3Automorphisms k3_automorphisms = K3Automorphisms::TRIVIAL;
  /// The involution J when present.
  std::optional<IntMatrix> j;
};

AutResult automorphisms(const Rank2Params& p);

struct FmClass {
  /// Values c (mod b) of the candidates Lambda_{b,c} in the class.
  std::vector<Integer> members;
  /// Genus one fibrations on the surface up to its automorphisms.
  int fibrations = 0;
};

struct FmPartnerCount {
  Integer b;
  std::vector<FmClass> classes;
  int class_count() const { return static_cast<int>(classes.size()); }
  int fibration_total() const;
};

/// Candidates Lambda_{b,-a^2}, a = 1 .. (b-1)/2, grouped by lambda_isometric.
/// Requires b prime with b = 1 mod 4.
FmPartnerCount fm_partner_count(const Integer& b);

/// Whether the discriminant form of Gamma_{b,c} has exactly one maximal
/// isotropic subgroup of order b. Requires gcd(b, 2c) = 1 and c < b - 1, or
/// (b, c) = (2, 0).
bool jacobian_unique(const Rank2Params& p, std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace k3
