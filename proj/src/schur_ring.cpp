#include "schurring/schur_ring.hpp"

#include <algorithm>

#include "schurring/errors.hpp"

namespace schurring {

RingElement RingElement::operator+(const RingElement& rhs) const {
  RingElement out(*this);
  for (std::size_t g = 0; g < size(); ++g) out.coeffs_[g] += rhs.coeffs_[g];
  return out;
}

RingElement RingElement::operator-(const RingElement& rhs) const {
  RingElement out(*this);
  for (std::size_t g = 0; g < size(); ++g) out.coeffs_[g] -= rhs.coeffs_[g];
  return out;
}

RingElement RingElement::operator*(std::int64_t k) const {
  RingElement out(*this);
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

// ---------------------------------------------------------------------------

GroupAlgebra::GroupAlgebra(GaloisField field) : plane_(std::move(field)) {
  const std::uint32_t n = size();
  if (n <= 1024) {
    table_.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h) table_[static_cast<std::size_t>(g) * n + h] = plane_.add(g, h);
  }
}

RingElement GroupAlgebra::multiply(const RingElement& a, const RingElement& b) const {
  const std::uint32_t n = size();
  if (a.size() != n || b.size() != n) throw PreconditionError("multiply: element of the wrong group ring");
  RingElement out(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    if (a[g] == 0) continue;
    for (std::uint32_t h = 0; h < n; ++h) {
      if (b[h] != 0) out[add(g, h)] += a[g] * b[h];
    }
  }
  return out;
}

RingElement GroupAlgebra::identity() const {
  RingElement out(size());
  out[0] = 1;
  return out;
}

RingElement GroupAlgebra::all_ones() const { return RingElement(std::vector<std::int64_t>(size(), 1)); }

RingElement class_sum(const GroupAlgebra& algebra, std::span<const std::uint32_t> block) {
  if (block.empty()) throw PreconditionError("class_sum: empty block");
  RingElement out(algebra.size());
  for (std::uint32_t g : block) {
    if (g >= algebra.size()) throw PreconditionError("class_sum: element outside the group");
    out[g] = 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

SchurBasis::SchurBasis(GaloisField field, std::vector<std::vector<std::uint32_t>> classes)
    : field_(std::move(field)), classes_(std::move(classes)) {
  const std::uint32_t n = field_.q() * field_.q();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  class_of_.assign(n, kUnset);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) throw PreconditionError("SchurBasis: empty class");
    for (std::uint32_t g : classes_[c]) {
      if (g >= n) throw PreconditionError("SchurBasis: element outside the group");
      if (class_of_[g] != kUnset) throw PreconditionError("SchurBasis: classes overlap");
      class_of_[g] = c;
    }
  }
  if (std::find(class_of_.begin(), class_of_.end(), kUnset) != class_of_.end()) {
    throw PreconditionError("SchurBasis: classes do not cover the group");
  }
}

std::vector<std::size_t> SchurBasis::class_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& cls : classes_) out.push_back(cls.size());
  return out;
}

SchurBasis build_schur_basis(const LinePartition& pi) { return {pi.field(), induced_partition(pi)}; }

namespace {

// Products of class sums; the first failure of constancy on a class is
// recorded in `violation`.
std::vector<std::int64_t> product_table(const SchurBasis& basis, std::optional<ProductViolation>& violation) {
  const GroupAlgebra algebra(basis.field());
  const std::size_t r = basis.rank();
  std::vector<RingElement> sums;
  for (const auto& cls : basis.classes()) sums.push_back(class_sum(algebra, cls));

  std::vector<std::int64_t> tensor(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const RingElement product = algebra.multiply(sums[i], sums[j]);
      for (std::size_t k = 0; k < r; ++k) {
        const auto& cls = basis.classes()[k];
        const std::int64_t c = product[cls.front()];
        for (std::uint32_t g : cls) {
          if (product[g] != c && !violation) {
            violation = ProductViolation{i, j, k, cls.front(), g, c, product[g]};
          }
        }
        tensor[(i * r + j) * r + k] = c;
      }
    }
  }
  return tensor;
}

std::string describe(const ProductViolation& v) {
  return "X_" + std::to_string(v.i) + " * X_" + std::to_string(v.j) + " has coefficients " +
         std::to_string(v.coeff_g) + " at " + std::to_string(v.g) + " and " + std::to_string(v.coeff_h) + " at " +
         std::to_string(v.h) + " inside class " + std::to_string(v.k);
}

}  // namespace

AxiomReport verify_schur_axioms(const SchurBasis& basis) {
  AxiomReport report;
  const Plane plane(basis.field());
  report.identity_class = basis.classes().front() == std::vector<std::uint32_t>{0};
  if (!report.identity_class) report.detail = "class 0 is not the identity class";

  report.inverse_closed = true;
  for (std::size_t c = 0; c < basis.rank() && report.inverse_closed; ++c) {
    for (std::uint32_t g : basis.classes()[c]) {
      if (basis.class_of(plane.neg(g)) != c) {
        report.inverse_closed = false;
        if (report.detail.empty()) {
          report.detail = "class " + std::to_string(c) + " contains " + std::to_string(g) + " but not its inverse";
        }
        break;
      }
    }
  }

  product_table(basis, report.violation);
  report.product_closed = !report.violation.has_value();
  if (report.violation && report.detail.empty()) report.detail = describe(*report.violation);
  return report;
}

StructureConstants::StructureConstants(std::size_t rank, std::vector<std::int64_t> tensor)
    : rank_(rank), tensor_(std::move(tensor)) {
  if (tensor_.size() != rank_ * rank_ * rank_) throw PreconditionError("StructureConstants: tensor size mismatch");
}

StructureConstants structure_constants(const SchurBasis& basis) {
  std::optional<ProductViolation> violation;
  auto tensor = product_table(basis, violation);
  if (violation) throw VerificationFailure("not a Schur ring: " + describe(*violation));
  return {basis.rank(), std::move(tensor)};
}

// ---------------------------------------------------------------------------

LineIdentityReport verify_line_identities(const LinePartition& pi) {
  LineIdentityReport report;
  const GaloisField& field = pi.field();
  const GroupAlgebra algebra(field);
  const Plane& plane = algebra.plane();
  const auto q = static_cast<std::int64_t>(field.q());
  const RingElement ones = algebra.all_ones();
  const RingElement unit = algebra.identity();

  const auto slopes = plane.slopes();
  std::vector<RingElement> lines;
  for (Slope s : slopes) {
    std::vector<std::uint32_t> pts;
    for (Point pt : line_points(field, s)) pts.push_back(plane.index(pt));
    lines.push_back(class_sum(algebra, pts));
  }

  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = 0; b < lines.size(); ++b) {
      const RingElement product = algebra.multiply(lines[a], lines[b]);
      if (a != b && product != ones) {
        report.distinct_lines = false;
        report.failures.push_back("L_" + slopes[a].literal() + " L_" + slopes[b].literal() + " != sum of V");
      }
      if (a == b && product != lines[a] * q) {
        report.line_squares = false;
        report.failures.push_back("L_" + slopes[a].literal() + "^2 != q L");
      }
    }
  }

  const auto blocks = induced_partition(pi);
  std::vector<RingElement> full;  // Q_i
  std::vector<std::int64_t> class_size;
  for (std::size_t i = 0; i < pi.rank(); ++i) {
    RingElement qi(algebra.size());
    for (Slope s : pi.classes()[i]) qi = qi + lines[s.dense(field.q())];
    class_size.push_back(static_cast<std::int64_t>(pi.classes()[i].size()));
    if (qi != unit * class_size[i] + class_sum(algebra, blocks[i + 1])) {
      report.span_identity = false;
      report.failures.push_back("Q_" + std::to_string(i) + " != |P_i| 1 + P~_i");
    }
    full.push_back(std::move(qi));
  }

  for (std::size_t i = 0; i < full.size(); ++i) {
    for (std::size_t j = 0; j < full.size(); ++j) {
      const RingElement product = algebra.multiply(full[i], full[j]);
      if (i != j && product != ones * (class_size[i] * class_size[j])) {
        report.mixed_products = false;
        report.failures.push_back("Q_" + std::to_string(i) + " Q_" + std::to_string(j) + " != |P_i||P_j| J");
      }
      if (i == j && product != full[i] * q + ones * (class_size[i] * (class_size[i] - 1))) {
        report.squares = false;
        report.failures.push_back("Q_" + std::to_string(i) + "^2 != q Q_i + |P_i|(|P_i|-1) J");
      }
    }
  }
  return report;
}

}  // namespace schurring
