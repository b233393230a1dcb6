#include "schurring/gf.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "schurring/errors.hpp"

namespace schurring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t FieldSpec::q() const {
  std::uint32_t result = 1;
  for (int i = 0; i < e; ++i) result *= static_cast<std::uint32_t>(p);
  return result;
}

std::string FieldSpec::literal() const { return std::to_string(p) + "^" + std::to_string(e); }

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), entries_(static_cast<std::size_t>(rows * cols), 0) {}

FpMatrix::FpMatrix(int rows, int cols, int p, std::vector<int> entries)
    : rows_(rows), cols_(cols), p_(p), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(rows * cols)) {
    throw PreconditionError("FpMatrix: entry count does not match shape");
  }
  for (int& v : entries_) {
    if (v < 0 || v >= p_) throw PreconditionError("FpMatrix: entry out of range [0, p)");
  }
}

FpMatrix FpMatrix::identity(int n, int p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1 % p);
  return m;
}

void FpMatrix::set(int r, int c, int value) {
  entries_[static_cast<std::size_t>(r * cols_ + c)] = ((value % p_) + p_) % p_;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw PreconditionError("FpMatrix: shape mismatch in product");
  FpMatrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < rhs.cols_; ++j) {
      long acc = 0;
      for (int k = 0; k < cols_; ++k) acc += static_cast<long>(at(i, k)) * rhs.at(k, j);
      out.set(i, j, static_cast<int>(acc % p_));
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_) {
    throw PreconditionError("FpMatrix: shape mismatch in sum");
  }
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = (entries_[i] + rhs.entries_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

FpMatrix FpMatrix::block(int row0, int col0, int rows, int cols) const {
  FpMatrix out(rows, cols, p_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.set(i, j, at(row0 + i, col0 + j));
  return out;
}

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DivisionByZero("inverse of zero mod p");
  // Extended Euclid.
  int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const int quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  return t < 0 ? t + p : t;
}

int FpMatrix::rank() const {
  std::vector<int> m = entries_;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (m[static_cast<std::size_t>(r * cols_ + col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < cols_; ++c) {
      std::swap(m[static_cast<std::size_t>(rank * cols_ + c)], m[static_cast<std::size_t>(pivot * cols_ + c)]);
    }
    const int inv = mod_inverse(m[static_cast<std::size_t>(rank * cols_ + col)], p_);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      const int factor = m[static_cast<std::size_t>(r * cols_ + col)] * inv % p_;
      if (factor == 0) continue;
      for (int c = 0; c < cols_; ++c) {
        auto& v = m[static_cast<std::size_t>(r * cols_ + c)];
        v = ((v - factor * m[static_cast<std::size_t>(rank * cols_ + c)]) % p_ + p_) % p_;
      }
    }
    ++rank;
  }
  return rank;
}

std::string FpMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) out << ';';
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// GaloisField

namespace {

// Multiplies the polynomial `digits` (degree < e) by x modulo the monic modulus.
std::vector<int> times_x(const std::vector<int>& digits, const std::vector<int>& modulus, int p) {
  const int e = static_cast<int>(digits.size());
  const int top = digits[static_cast<std::size_t>(e - 1)];
  std::vector<int> out(digits.size(), 0);
  for (int i = e - 1; i >= 1; --i) out[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i - 1)];
  for (int i = 0; i < e; ++i) {
    out[static_cast<std::size_t>(i)] =
        ((out[static_cast<std::size_t>(i)] - top * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
  }
  return out;
}

std::uint32_t encode(const std::vector<int>& digits, int p) {
  std::uint32_t index = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) index = index * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(*it);
  return index;
}

// Powers of the root of `modulus`; empty unless the root has order exactly q-1.
std::vector<std::uint32_t> primitive_powers(const std::vector<int>& modulus, int p, std::uint32_t q) {
  const int e = static_cast<int>(modulus.size());
  std::vector<int> power(static_cast<std::size_t>(e), 0);
  power[0] = 1;
  std::vector<std::uint32_t> exp;
  exp.reserve(q - 1);
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    const std::uint32_t index = encode(power, p);
    if (index == 0 || (k > 0 && index == 1)) return {};
    exp.push_back(index);
    power = times_x(power, modulus, p);
  }
  if (encode(power, p) != 1) return {};
  return exp;
}

}  // namespace

GaloisField GaloisField::make(int p, int e, std::uint64_t element_cap) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("make_field: p = " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw PreconditionError("make_field: e must be at least 1");
  std::uint64_t q64 = 1;
  for (int i = 0; i < e; ++i) {
    q64 *= static_cast<std::uint64_t>(p);
    if (q64 > element_cap) {
      throw SizingError("make_field: field order " + std::to_string(p) + "^" + std::to_string(e) +
                        " exceeds element cap " + std::to_string(element_cap));
    }
  }
  const auto q = static_cast<std::uint32_t>(q64);

  auto data = std::make_shared<Data>();
  data->spec.p = p;
  data->spec.e = e;
  data->q = q;

  if (e == 1) {
    for (int g = 1; g < p; ++g) {
      std::vector<int> modulus{(p - g) % p};
      auto exp = primitive_powers(modulus, p, q);
      if (!exp.empty()) {
        data->spec.modulus = std::move(modulus);
        data->spec.zeta_index = static_cast<std::uint32_t>(g);
        data->exp = std::move(exp);
        break;
      }
    }
  } else {
    // Lexicographic in (c_0, ..., c_{e-1}): c_0 is the most significant digit of t.
    for (std::uint32_t t = 0; t < q && data->exp.empty(); ++t) {
      std::vector<int> modulus(static_cast<std::size_t>(e), 0);
      std::uint32_t rest = t;
      for (int i = e - 1; i >= 0; --i) {
        modulus[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint32_t>(p));
        rest /= static_cast<std::uint32_t>(p);
      }
      auto exp = primitive_powers(modulus, p, q);
      if (!exp.empty()) {
        data->spec.modulus = std::move(modulus);
        data->spec.zeta_index = static_cast<std::uint32_t>(p);
        data->exp = std::move(exp);
      }
    }
  }
  if (data->exp.empty()) throw Error("make_field: no primitive modulus found");

  data->log.assign(q, 0);
  for (std::uint32_t k = 0; k < data->exp.size(); ++k) data->log[data->exp[k]] = k;
  data->pow_p.resize(static_cast<std::size_t>(e + 1));
  data->pow_p[0] = 1;
  for (int i = 1; i <= e; ++i) data->pow_p[static_cast<std::size_t>(i)] = data->pow_p[static_cast<std::size_t>(i - 1)] * static_cast<std::uint32_t>(p);

  GaloisField field(data);
  if (q <= 256) {
    data->add_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) data->add_table[static_cast<std::size_t>(a) * q + b] = field.add_digits(a, b);
  }
  return GaloisField(std::move(data));
}

FieldElement GaloisField::element(std::uint64_t index) const {
  if (index >= q()) {
    throw PreconditionError("element index " + std::to_string(index) + " outside GF(" + spec().literal() + ")");
  }
  return {static_cast<std::uint32_t>(index)};
}

std::uint32_t GaloisField::add_digits(std::uint32_t a, std::uint32_t b) const {
  const auto p = static_cast<std::uint32_t>(data_->spec.p);
  if (p == 2) return a ^ b;
  std::uint32_t out = 0;
  for (int i = 0; i < data_->spec.e; ++i) {
    const std::uint32_t place = data_->pow_p[static_cast<std::size_t>(i)];
    out += ((a / place % p + b / place % p) % p) * place;
  }
  return out;
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
  if (!data_->add_table.empty()) return {data_->add_table[static_cast<std::size_t>(a.index) * q() + b.index]};
  return {add_digits(a.index, b.index)};
}

FieldElement GaloisField::neg(FieldElement a) const { return scale(p() - 1, a); }

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (a.index == 0 || b.index == 0) return zero();
  const std::uint32_t order = q() - 1;
  return {data_->exp[(data_->log[a.index] + data_->log[b.index]) % order]};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.index == 0) throw DivisionByZero("inverse of zero in GF(" + spec().literal() + ")");
  const std::uint32_t order = q() - 1;
  return {data_->exp[(order - data_->log[a.index]) % order]};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t order = q() - 1;
  return {data_->exp[static_cast<std::size_t>((static_cast<std::uint64_t>(data_->log[a.index]) * (k % order)) % order)]};
}

std::uint64_t GaloisField::order(FieldElement a) const {
  if (a.index == 0) throw DivisionByZero("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (FieldElement x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

FieldElement GaloisField::scale(int c, FieldElement a) const {
  const int p = this->p();
  c = ((c % p) + p) % p;
  if (c == 0) return zero();
  const auto pu = static_cast<std::uint32_t>(p);
  std::uint32_t out = 0;
  for (int i = 0; i < e(); ++i) {
    const std::uint32_t place = data_->pow_p[static_cast<std::size_t>(i)];
    out += (a.index / place % pu * static_cast<std::uint32_t>(c) % pu) * place;
  }
  return {out};
}

int GaloisField::digit(FieldElement a, int i) const {
  return static_cast<int>(a.index / data_->pow_p[static_cast<std::size_t>(i)] % static_cast<std::uint32_t>(p()));
}

FieldElement GaloisField::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != e()) throw PreconditionError("from_digits: expected e digits");
  std::uint32_t out = 0;
  for (int i = 0; i < e(); ++i) {
    const int d = ((digits[static_cast<std::size_t>(i)] % p()) + p()) % p();
    out += static_cast<std::uint32_t>(d) * data_->pow_p[static_cast<std::size_t>(i)];
  }
  return {out};
}

FpMatrix GaloisField::regular_representation(FieldElement a) const {
  if (!contains(a)) throw FieldMismatch("regular_representation: element outside GF(" + spec().literal() + ")");
  FpMatrix psi(e(), e(), p());
  for (int j = 0; j < e(); ++j) {
    const FieldElement row = mul(pow(zeta(), static_cast<std::uint64_t>(j)), a);
    for (int k = 0; k < e(); ++k) psi.set(j, k, digit(row, k));
  }
  return psi;
}

bool GaloisField::is_subfield(std::span<const FieldElement> s) const {
  std::vector<char> member(q(), 0);
  for (FieldElement a : s) {
    if (!contains(a)) return false;
    member[a.index] = 1;
  }
  if (!member[0] || !member[1]) return false;
  std::vector<FieldElement> elems;
  for (std::uint32_t i = 0; i < q(); ++i)
    if (member[i]) elems.push_back({i});
  for (FieldElement a : elems) {
    for (FieldElement b : elems) {
      if (!member[add(a, b).index] || !member[mul(a, b).index]) return false;
    }
  }
  return true;
}

std::vector<std::vector<FieldElement>> GaloisField::subfields() const {
  std::vector<std::vector<FieldElement>> out;
  for (int d = 1; d <= e(); ++d) {
    if (e() % d != 0) continue;
    const std::uint64_t exponent = data_->pow_p[static_cast<std::size_t>(d)];
    std::vector<FieldElement> fixed;
    for (std::uint32_t i = 0; i < q(); ++i) {
      if (pow({i}, exponent).index == i) fixed.push_back({i});
    }
    out.push_back(std::move(fixed));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(GaloisField field, FieldElement value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) throw FieldMismatch("element index outside GF(" + field_.spec().literal() + ")");
}

void Element::check_same_field(const Element& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw FieldMismatch("operands from GF(" + field_.spec().literal() + ") and GF(" + rhs.field_.spec().literal() + ")");
  }
}

Element Element::operator+(const Element& rhs) const {
  check_same_field(rhs);
  return {field_, field_.add(value_, rhs.value_)};
}

Element Element::operator-(const Element& rhs) const {
  check_same_field(rhs);
  return {field_, field_.sub(value_, rhs.value_)};
}

Element Element::operator-() const { return {field_, field_.neg(value_)}; }

Element Element::operator*(const Element& rhs) const {
  check_same_field(rhs);
  return {field_, field_.mul(value_, rhs.value_)};
}

Element Element::inverse() const { return {field_, field_.inv(value_)}; }

bool Element::operator==(const Element& rhs) const {
  check_same_field(rhs);
  return value_ == rhs.value_;
}

}  // namespace schurring
