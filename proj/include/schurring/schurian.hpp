#pragma once

// Schurianness of S(pi): the automorphism-group oracle, the subfield
// criterion on singleton slopes, the invariant-slope machinery for F_p-linear
// maps of V, and the census that cross-checks criterion against oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "schurring/automorphism.hpp"
#include "schurring/schur_ring.hpp"

namespace schurring {

inline constexpr std::uint64_t kDefaultGlCap = 10'000'000;

enum class OracleVerdict { schurian, non_schurian };
enum class CriterionVerdict { predicts_nonschurian, no_prediction };

std::string to_string(OracleVerdict v);
std::string to_string(CriterionVerdict v);

/// Edge color of (g, h) is the class of h - g; the identity class colors the diagonal.
ColorGraph scheme_graph(const SchurBasis& basis);

struct SchurianReport {
  LinePartition partition;
  std::size_t scheme_rank = 0;
  /// Decimal order of the automorphism group of the scheme.
  std::string aut_order;
  std::vector<std::size_t> stabilizer_orbit_sizes;  // ascending
  std::vector<std::size_t> class_sizes;             // ascending
  OracleVerdict oracle_verdict = OracleVerdict::schurian;
  CriterionVerdict criterion_verdict = CriterionVerdict::no_prediction;
  bool consistent = true;
};

struct OracleOptions {
  std::uint32_t oracle_cap = kDefaultOracleCap;
};

/// S(pi) is schurian iff the orbits of the origin stabilizer in the full
/// automorphism group of its scheme equal the classes.  Any group realizing
/// the classes lies inside that automorphism group, which contains the
/// translations, and stabilizer orbits always refine the classes, so the
/// equality test decides schurianness.
SchurianReport is_schurian(const LinePartition& pi, const OracleOptions& options = {});

/// predicts_nonschurian iff condition_holds(pi).  no_prediction is not a schurian verdict.
CriterionVerdict criterion(const LinePartition& pi);

/// Invertible F_p-linear map of V acting on coordinate columns in the basis
/// {x, zeta x, ..., zeta^{e-1} x, y, zeta y, ..., zeta^{e-1} y}, x = (1,0), y = (0,1).
class LinearMap2e {
 public:
  LinearMap2e(const GaloisField& field, FpMatrix matrix);

  /// An F-linear plane map viewed over F_p.
  static LinearMap2e from_plane_map(const GaloisField& field, const PlaneMap& g);
  static LinearMap2e scalar(const GaloisField& field, FieldElement c);
  /// (x, y) -> (x^p, y^p).
  static LinearMap2e frobenius(const GaloisField& field);
  /// Images of the 2e basis vectors, as point indices.
  static LinearMap2e from_basis_images(const GaloisField& field, const std::vector<std::uint32_t>& images);

  const FpMatrix& matrix() const { return matrix_; }
  std::uint32_t apply(std::uint32_t point) const;
  /// Point permutation of V.
  Permutation permutation() const;

  bool operator==(const LinearMap2e& other) const { return matrix_ == other.matrix_; }

 private:
  Plane plane_;
  FpMatrix matrix_;
};

/// Slopes s (infinity included) with sigma(L_s) = L_s.
std::vector<Slope> invariant_slopes(const GaloisField& field, const LinearMap2e& sigma);

struct FixingMapReport {
  std::vector<Slope> invariant;
  std::vector<FieldElement> finite_invariant;
  bool subfield = false;
  bool blocks_equal = false;
  bool commutes = false;
  /// Blocks of sigma on the bases of L_0, L_inf, L_1: sigma(s V(x)) = s A V(x), etc.
  FpMatrix a, b, c;
  std::string detail;

  bool passed() const { return subfield && blocks_equal && commutes; }
};

/// Throws PreconditionError naming the first of L_0, L_1, L_inf that sigma does not preserve.
FixingMapReport verify_fixing_map(const GaloisField& field, const LinearMap2e& sigma);

/// Every element of GL(2e, p) preserving L_0, L_1 and L_inf, in enumeration order.
std::vector<LinearMap2e> maps_fixing_reference_lines(const GaloisField& field);

/// |GL(n, p)|
BigInt gl_order(int n, int p);

struct PreservingMaps {
  std::vector<LinearMap2e> maps;
  /// The same maps as a permutation group on the q^2 points.
  PermutationGroup group;
};

/// All sigma in GL(2e, p) mapping each class of the induced partition onto
/// itself.  Throws SizingError when |GL(2e, p)| exceeds gl_cap.
PreservingMaps partition_preserving_maps(const LinePartition& pi, std::uint64_t gl_cap = kDefaultGlCap);

enum class Scope { all, filtered };

struct CensusOptions {
  std::uint32_t oracle_cap = kDefaultOracleCap;
  std::size_t census_cap = kDefaultCensusCap;
  /// 0 means available hardware parallelism.
  unsigned workers = 0;
};

struct CensusRow {
  std::size_t index = 0;  // position in enumeration order
  LinePartition partition;
  std::vector<Slope> singletons;
  bool condition = false;
  CriterionVerdict criterion_verdict = CriterionVerdict::no_prediction;
  bool has_oracle = false;
  SchurianReport report;  // valid when has_oracle
};

struct CensusTable {
  FieldSpec field;
  bool with_oracle = false;
  std::vector<CensusRow> rows;

  std::size_t count(CriterionVerdict c) const;
  std::size_t count(CriterionVerdict c, OracleVerdict o) const;
  std::size_t inconsistent() const;
};

/// Criterion over every partition (or only the condition-satisfying ones), no oracle.
CensusTable census(const GaloisField& field, Scope scope, const CensusOptions& options = {});

/// Criterion and oracle over the scope.  Throws VerificationFailure naming
/// the first partition predicted non-schurian but found schurian.
CensusTable cross_validate(const GaloisField& field, Scope scope, const CensusOptions& options = {});

/// Runs cross_validate without throwing on inconsistency.
CensusTable cross_validate_table(const GaloisField& field, Scope scope, const CensusOptions& options = {});

}  // namespace schurring
