#pragma once

// Lines of V = F^2, partitions of the line set, the induced partition of V
// and Moebius normalization of partitions.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schurring/gf.hpp"

namespace schurring {

inline constexpr std::size_t kDefaultCensusCap = 12;

/// Names the line L_s.  Finite slopes order by element index; infinity is greatest.
class Slope {
 public:
  static Slope finite(FieldElement value) { return Slope(value.index); }
  static Slope infinity() { return Slope(kInfinity); }

  bool is_infinite() const { return code_ == kInfinity; }
  /// Only meaningful for finite slopes.
  FieldElement value() const { return {code_}; }
  /// Dense index in [0, q]: finite slopes by element index, infinity -> q.
  std::uint32_t dense(std::uint32_t q) const { return is_infinite() ? q : code_; }
  static Slope from_dense(std::uint32_t dense, std::uint32_t q) { return dense == q ? infinity() : Slope(dense); }

  std::string literal() const { return is_infinite() ? "inf" : std::to_string(code_); }

  auto operator<=>(const Slope&) const = default;

 private:
  static constexpr std::uint32_t kInfinity = 0xFFFFFFFFu;
  explicit Slope(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

struct Point {
  FieldElement x;
  FieldElement y;
  auto operator<=>(const Point&) const = default;
};

/// The plane V = F^2 with points indexed x + q * y, so the origin is point 0.
/// As an F_p-space a point index is the base-p number whose digits are the
/// coordinates in the basis {x, zeta x, ..., y, zeta y, ...}, x = (1,0), y = (0,1).
class Plane {
 public:
  explicit Plane(GaloisField field);

  const GaloisField& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint32_t size() const { return q() * q(); }

  std::uint32_t index(Point pt) const { return pt.x.index + q() * pt.y.index; }
  Point point(std::uint32_t index) const { return {{index % q()}, {index / q()}}; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t scale(FieldElement c, std::uint32_t a) const;

  /// Slope of the unique line through the origin and a nonzero point.
  Slope slope_of(std::uint32_t index) const;
  /// All slopes in canonical order: 0, 1, ..., q-1, inf.
  std::vector<Slope> slopes() const;

  /// F_p coordinates (2e digits) and back.
  std::vector<int> coordinates(std::uint32_t index) const;
  std::uint32_t from_coordinates(const std::vector<int>& coords) const;

 private:
  GaloisField field_;
};

/// The q points of L_s, origin first, then ordered by the parameter x in (x, s x).
std::vector<Point> line_points(const GaloisField& field, Slope s);
/// L_s without the origin: q - 1 points.
std::vector<Point> punctured_line(const GaloisField& field, Slope s);

/// A set partition of the q + 1 slopes, kept in canonical form: each class
/// sorted, classes ordered by their least member.
class LinePartition {
 public:
  LinePartition(GaloisField field, std::vector<std::vector<Slope>> classes);

  static LinePartition singletons(const GaloisField& field);
  static LinePartition one_class(const GaloisField& field);

  const GaloisField& field() const { return field_; }
  const std::vector<std::vector<Slope>>& classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }
  /// Index of the class containing s.
  std::size_t class_of(Slope s) const;

  /// "0|1|2,3,4|inf"
  std::string literal() const;

  bool operator==(const LinePartition& other) const {
    return field_ == other.field_ && classes_ == other.classes_;
  }

 private:
  GaloisField field_;
  std::vector<std::vector<Slope>> classes_;
  std::vector<std::uint32_t> class_of_dense_;
};

/// {origin} followed by one block per class (union of punctured lines), as point indices.
std::vector<std::vector<std::uint32_t>> induced_partition(const LinePartition& pi);

/// M(pi): slopes whose class is a singleton, sorted.
std::vector<Slope> singleton_slopes(const LinePartition& pi);

/// {inf, 0, 1} within M(pi) and M(pi) minus inf is not a subfield.
bool condition_holds(const LinePartition& pi);

/// 2x2 matrix over F acting on column vectors (x, y) -> (a x + b y, c x + d y).
struct PlaneMap {
  FieldElement a, b, c, d;
};

/// The slope map induced by a plane map: L_s -> L_{m(s)}.
Slope apply_to_slope(const GaloisField& field, const PlaneMap& g, Slope s);
Point apply_to_point(const GaloisField& field, const PlaneMap& g, Point pt);

struct MobiusNormalization {
  LinePartition partition;
  /// Pivots sent to inf, 0, 1 respectively.
  std::array<Slope, 3> pivots;
  PlaneMap map;
};

/// Transports pi by the fractional-linear map sending the pivots to inf, 0, 1.
/// Pivots: the three least members of M(pi) with infinity ranked first, so a
/// partition with {inf, 0, 1} in M is transported by the identity.
/// Returns nullopt when |M(pi)| < 3.
std::optional<MobiusNormalization> mobius_normalize(const LinePartition& pi);

/// Bell number B(n).
std::uint64_t bell_number(unsigned n);

using PartitionFilter = std::function<bool(const LinePartition&)>;
using PartitionVisitor = std::function<void(const LinePartition&)>;

/// Visits every set partition of the slopes once, in restricted-growth-string
/// order over the canonical slope order, skipping those rejected by `filter`.
void enumerate_partitions(const GaloisField& field, const PartitionFilter& filter, const PartitionVisitor& visit,
                          std::size_t census_cap = kDefaultCensusCap);

/// Materializes enumerate_partitions.
std::vector<LinePartition> all_partitions(const GaloisField& field, const PartitionFilter& filter = {},
                                          std::size_t census_cap = kDefaultCensusCap);

}  // namespace schurring
