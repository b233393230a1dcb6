#pragma once

// Finite-field engine: GF(p^e) with a fixed primitive generator, matrices over
// the prime field, the regular representation and subfield detection.
//
// Elements are encoded as integer indices: index = sum c_i p^i where the
// element equals sum c_i zeta^i with 0 <= c_i < p.  Index 0 is zero, index 1
// is one.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace schurring {

inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

struct FieldSpec {
  int p = 0;
  int e = 0;
  /// Monic modulus, coefficients c_0..c_{e-1}; the leading x^e is implicit.
  std::vector<int> modulus;
  std::uint32_t zeta_index = 0;

  std::uint32_t q() const;
  /// "p^e"
  std::string literal() const;

  bool operator==(const FieldSpec&) const = default;
};

struct FieldElement {
  std::uint32_t index = 0;

  auto operator<=>(const FieldElement&) const = default;
};

/// Dense matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, int p);
  FpMatrix(int rows, int cols, int p, std::vector<int> entries);

  static FpMatrix identity(int n, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return p_; }

  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, int value);
  const std::vector<int>& entries() const { return entries_; }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  bool operator==(const FpMatrix&) const = default;

  FpMatrix transpose() const;
  FpMatrix block(int row0, int col0, int rows, int cols) const;
  int rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<int> entries_;
};

int mod_inverse(int a, int p);

/// GF(p^e) realized with the lexicographically first primitive monic modulus
/// (for e = 1: x - g with g the least primitive root).  Cheap to copy; the
/// tables are shared and immutable.
class GaloisField {
 public:
  static GaloisField make(int p, int e, std::uint64_t element_cap = kDefaultElementCap);

  const FieldSpec& spec() const { return data_->spec; }
  int p() const { return data_->spec.p; }
  int e() const { return data_->spec.e; }
  std::uint32_t q() const { return data_->q; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement zeta() const { return {data_->spec.zeta_index}; }
  /// Checked conversion from an index.
  FieldElement element(std::uint64_t index) const;
  bool contains(FieldElement a) const { return a.index < q(); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;
  /// x -> x^p
  FieldElement frobenius(FieldElement a) const { return pow(a, static_cast<std::uint64_t>(p())); }
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElement a) const;

  /// Prime-field multiple c * a for an integer c.
  FieldElement scale(int c, FieldElement a) const;
  int digit(FieldElement a, int i) const;
  FieldElement from_digits(std::span<const int> digits) const;

  /// Matrix of multiplication by a in the basis {1, zeta, ..., zeta^{e-1}};
  /// row j holds the coordinates of zeta^j * a, so Psi(a) V(1) = V(a).
  FpMatrix regular_representation(FieldElement a) const;

  /// True iff s contains 0 and 1 and is closed under + and *.
  bool is_subfield(std::span<const FieldElement> s) const;
  /// One subfield per divisor d of e (order p^d, ascending), as sorted sets.
  std::vector<std::vector<FieldElement>> subfields() const;

  bool operator==(const GaloisField& other) const { return spec() == other.spec(); }

 private:
  struct Data {
    FieldSpec spec;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> exp;  // exp[k] = zeta^k, k in [0, q-1)
    std::vector<std::uint32_t> log;  // log[exp[k]] = k; log[0] unused
    std::vector<std::uint32_t> pow_p;  // p^i, i in [0, e]
    std::vector<std::uint32_t> add_table;  // q*q when small, else empty
  };

  explicit GaloisField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;

  std::shared_ptr<const Data> data_;
};

/// An element bound to its field; arithmetic across different fields throws FieldMismatch.
class Element {
 public:
  Element(GaloisField field, FieldElement value);

  const GaloisField& field() const { return field_; }
  FieldElement value() const { return value_; }

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;
  Element inverse() const;
  bool operator==(const Element& rhs) const;

 private:
  void check_same_field(const Element& rhs) const;

  GaloisField field_;
  FieldElement value_;
};

}  // namespace schurring
