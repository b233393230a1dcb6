#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schurring/errors.hpp"
#include "schurring/perm.hpp"

using namespace schurring;

namespace {

Permutation cycle(std::uint32_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(img);
}

Permutation transposition(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::swap(img[a], img[b]);
  return Permutation(img);
}

Permutation random_perm(std::uint32_t n, std::mt19937& rng) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

bool even(const Permutation& g) {
  std::vector<char> seen(g.degree(), 0);
  std::size_t transpositions = 0;
  for (std::uint32_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::uint32_t x = i; !seen[x]; x = g[x]) {
      seen[x] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
  const auto c = cycle(4);
  const auto t = transposition(4, 0, 1);
  // g * h applies g first.
  const auto ct = c * t;
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(ct[x] == t[c[x]]);
  CHECK((c * c.inverse()).is_identity());
  CHECK(Permutation::identity(5).is_identity());
}

TEST_CASE("orbits") {
  CHECK(orbits(4, {}).size() == 4);
  const auto o = orbits(6, {Permutation({1, 0, 3, 2, 4, 5}), Permutation({0, 2, 1, 3, 4, 5})});
  REQUIRE(o.size() == 3);
  CHECK(o[0] == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(o[1] == std::vector<std::uint32_t>{4});
}

TEST_CASE("symmetric and alternating group orders") {
  for (std::uint32_t n = 2; n <= 10; ++n) {
    PermutationGroup sym(n, {cycle(n), transposition(n, 0, 1)});
    CHECK(sym.order() == BigInt(oracle::factorial(n)));
    const auto stab = sym.point_stabilizer(0);
    CHECK(stab.order() == BigInt(oracle::factorial(n - 1)));
    for (const auto& g : stab.generators()) CHECK(g[0] == 0);
    const auto stab3 = sym.point_stabilizer(n - 1);
    CHECK(stab3.order() == BigInt(oracle::factorial(n - 1)));
    for (const auto& g : stab3.generators()) CHECK(g[n - 1] == n - 1);
  }
  for (std::uint32_t n = 3; n <= 9; ++n) {
    std::vector<Permutation> gens;
    for (std::uint32_t i = 2; i < n; ++i) {
      std::vector<std::uint32_t> img(n);
      std::iota(img.begin(), img.end(), 0u);
      img[0] = 1;
      img[1] = i;
      img[i] = 0;
      gens.emplace_back(img);
    }
    PermutationGroup alt(n, gens);
    CHECK(alt.order() == BigInt(oracle::factorial(n) / 2));
    std::mt19937 rng(n);
    for (int k = 0; k < 40; ++k) {
      const auto g = random_perm(n, rng);
      CHECK(alt.contains(g) == even(g));
    }
  }
  CHECK(PermutationGroup(30, {cycle(30), transposition(30, 0, 1)}).order_string() ==
        "265252859812191058636308480000000");
}

TEST_CASE("orbit-stabilizer on the chain") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint32_t n = 8;
    PermutationGroup g(n, {random_perm(n, rng), random_perm(n, rng)});
    const auto& levels = g.levels();
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
      PermutationGroup sub(n, levels[i].generators);
      PermutationGroup next(n, levels[i + 1].generators);
      CHECK(sub.order() == next.order() * levels[i].orbit.size());
    }
    const auto stab = g.point_stabilizer(3);
    std::size_t orbit = 0;
    for (const auto& o : g.orbits())
      if (std::find(o.begin(), o.end(), 3u) != o.end()) orbit = o.size();
    CHECK(g.order() == stab.order() * orbit);
  }
}

TEST_CASE("membership and transversals") {
  const std::uint32_t n = 6;
  // Dihedral group of the hexagon, order 12.
  PermutationGroup d(n, {cycle(n), Permutation({0, 5, 4, 3, 2, 1})});
  CHECK(d.order() == 12);
  CHECK(d.contains(cycle(n) * cycle(n)));
  CHECK_FALSE(d.contains(transposition(n, 0, 1)));
  for (const auto& level : d.levels())
    for (auto x : level.orbit) CHECK(level.transversal[static_cast<std::size_t>(level.slot[x])][level.base_point] == x);
  const auto rebuilt = PermutationGroup::from_strong_generators(n, d.base(), d.generators());
  CHECK(rebuilt.order() == 12);
}

TEST_CASE("trivial and regular groups") {
  PermutationGroup trivial(5);
  CHECK(trivial.order() == 1);
  CHECK(trivial.orbits().size() == 5);
  PermutationGroup regular(7, {cycle(7)});
  CHECK(regular.order() == 7);
  CHECK(regular.orbits().size() == 1);
  CHECK(regular.point_stabilizer(0).order() == 1);
}
