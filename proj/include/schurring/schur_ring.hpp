#pragma once

// The integer group ring Z H over H = V^+ (elementary abelian of order q^2),
// class sums, the Schur ring of a line partition and its structure constants.
//
// The isomorphism V^+ -> H is the identity on coordinates; the group
// operation is vector addition in Plane.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurring/lines.hpp"

namespace schurring {

/// Dense coefficient vector over the q^2 group elements.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(std::size_t size) : coeffs_(size, 0) {}
  explicit RingElement(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](std::uint32_t g) const { return coeffs_[g]; }
  std::int64_t& operator[](std::uint32_t g) { return coeffs_[g]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator*(std::int64_t k) const;
  bool operator==(const RingElement&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

class GroupAlgebra {
 public:
  explicit GroupAlgebra(GaloisField field);

  const Plane& plane() const { return plane_; }
  std::uint32_t size() const { return plane_.size(); }

  std::uint32_t add(std::uint32_t g, std::uint32_t h) const {
    return table_.empty() ? plane_.add(g, h) : table_[static_cast<std::size_t>(g) * size() + h];
  }

  /// (a b)(h) = sum_g a(g) b(h - g)
  RingElement multiply(const RingElement& a, const RingElement& b) const;

  RingElement identity() const;
  /// Sum of every group element.
  RingElement all_ones() const;

 private:
  Plane plane_;
  std::vector<std::uint32_t> table_;
};

/// The 0/1 element supported on `block`.
RingElement class_sum(const GroupAlgebra& algebra, std::span<const std::uint32_t> block);

/// A partition of H into classes, stored in the given order.  Class 0 is
/// expected to be the identity; verify_schur_axioms reports otherwise.
class SchurBasis {
 public:
  SchurBasis(GaloisField field, std::vector<std::vector<std::uint32_t>> classes);

  const GaloisField& field() const { return field_; }
  const std::vector<std::vector<std::uint32_t>>& classes() const { return classes_; }
  std::size_t rank() const { return classes_.size(); }
  std::size_t class_of(std::uint32_t g) const { return class_of_[g]; }
  std::vector<std::size_t> class_sizes() const;

 private:
  GaloisField field_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Classes {origin}, P~_1, ..., P~_r.
SchurBasis build_schur_basis(const LinePartition& pi);

struct ProductViolation {
  std::size_t i = 0, j = 0, k = 0;
  /// Two elements of class k with different coefficients in X_i X_j.
  std::uint32_t g = 0, h = 0;
  std::int64_t coeff_g = 0, coeff_h = 0;
};

struct AxiomReport {
  bool identity_class = false;
  bool inverse_closed = false;
  bool product_closed = false;
  std::optional<ProductViolation> violation;
  std::string detail;

  bool passed() const { return identity_class && inverse_closed && product_closed; }
};

AxiomReport verify_schur_axioms(const SchurBasis& basis);

/// c[i][j][k] with X_i X_j = sum_k c[i][j][k] X_k.
class StructureConstants {
 public:
  StructureConstants(std::size_t rank, std::vector<std::int64_t> tensor);

  std::size_t rank() const { return rank_; }
  std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * rank_ + j) * rank_ + k]; }
  const std::vector<std::int64_t>& tensor() const { return tensor_; }

  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t rank_;
  std::vector<std::int64_t> tensor_;
};

/// Computed by convolution.  Throws VerificationFailure naming the product-closure witness
/// when the basis does not span a subring.
StructureConstants structure_constants(const SchurBasis& basis);

/// Convolution checks of the line-sum identities: distinct full lines
/// multiply to the all-ones element, a full line squares to q times itself,
/// S(pi) = Z 1 + sum Z Q_i, Q_i Q_j = |P_i||P_j| J for i != j and
/// Q_i^2 = q Q_i + |P_i|(|P_i| - 1) J, where J is the sum of all of V.
struct LineIdentityReport {
  bool distinct_lines = true;
  bool line_squares = true;
  bool span_identity = true;
  bool mixed_products = true;
  bool squares = true;
  std::vector<std::string> failures;

  bool passed() const { return distinct_lines && line_squares && span_identity && mixed_products && squares; }
};

LineIdentityReport verify_line_identities(const LinePartition& pi);

}  // namespace schurring
