#pragma once

// Permutations on [0, n) and permutation groups with a stabilizer chain.
//
// Right-action convention: x^(g*h) = (x^g)^h, i.e. g * h applies g first.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace schurring {

using BigInt = boost::multiprecision::cpp_int;

class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError if `images` is not a bijection of [0, n).
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator[](std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Apply *this, then rhs.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Orbit partition of [0, n) under `generators`; orbits sorted internally and by least element.
std::vector<std::vector<std::uint32_t>> orbits(std::uint32_t n, const std::vector<Permutation>& generators);

/// One level of the stabilizer chain: the base point, the strong generators
/// fixing all earlier base points, and a transversal of the base point's orbit.
struct ChainLevel {
  std::uint32_t base_point = 0;
  std::vector<Permutation> generators;
  std::vector<std::uint32_t> orbit;
  /// transversal[slot[x]] maps base_point to x; slot[x] = -1 outside the orbit.
  std::vector<std::int32_t> slot;
  std::vector<Permutation> transversal;
};

class PermutationGroup {
 public:
  /// Trivial group of degree n.
  explicit PermutationGroup(std::uint32_t n);
  /// Deterministic Schreier-Sims.  The base is `base_prefix` followed by the
  /// remaining points in increasing order.
  PermutationGroup(std::uint32_t n, std::vector<Permutation> generators, std::vector<std::uint32_t> base_prefix = {});

  /// Builds the chain from a base and strong generating set known to be
  /// complete (e.g. produced by the automorphism search).  No closure is run.
  static PermutationGroup from_strong_generators(std::uint32_t n, std::vector<std::uint32_t> base,
                                                 std::vector<Permutation> strong_generators);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<std::uint32_t> base() const;

  /// Product of the fundamental orbit sizes.
  BigInt order() const;
  std::string order_string() const;

  bool contains(const Permutation& g) const;
  std::vector<std::vector<std::uint32_t>> orbits() const { return schurring::orbits(degree_, generators_); }

  /// The stabilizer of `point`; reuses the chain when `point` is the first base point.
  PermutationGroup point_stabilizer(std::uint32_t point) const;

 private:
  PermutationGroup() = default;
  void build_level(ChainLevel& level) const;
  /// Sifts g from level `start`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start) const;
  void schreier_sims();

  std::uint32_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
};

}  // namespace schurring
