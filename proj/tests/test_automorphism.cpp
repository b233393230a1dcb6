#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "schurring/errors.hpp"
#include "schurring/schurian.hpp"

using namespace schurring;

namespace {

Slope fin(std::uint32_t i) { return Slope::finite({i}); }

LinePartition wielandt() {
  return {GaloisField::make(5, 1), {{Slope::infinity()}, {fin(0)}, {fin(1)}, {fin(2), fin(3), fin(4)}}};
}

ColorGraph complete(std::uint32_t n) {
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n) * n, 1);
  for (std::uint32_t i = 0; i < n; ++i) c[static_cast<std::size_t>(i) * n + i] = 0;
  return {n, c};
}

oracle::NaiveGraph naive_graph(const ColorGraph& g) {
  oracle::NaiveGraph out;
  out.n = g.size();
  for (std::uint32_t u = 0; u < g.size(); ++u)
    for (std::uint32_t v = 0; v < g.size(); ++v) out.color.push_back(g.color(u, v));
  return out;
}

Permutation translation(const Plane& plane, std::uint32_t t) {
  std::vector<std::uint32_t> img(plane.size());
  for (std::uint32_t x = 0; x < plane.size(); ++x) img[x] = plane.add(x, t);
  return Permutation(img);
}

std::vector<std::uint32_t> labels(const Coloring& c) { return c.cell_of; }

}  // namespace

TEST_CASE("color graph validation") {
  CHECK_THROWS_AS(ColorGraph(2, {0, 1, 2, 0}), PreconditionError);
  CHECK_THROWS_AS(ColorGraph(2, {0, 0, 0, 0}), PreconditionError);
  CHECK_NOTHROW(ColorGraph(2, {0, 1, 1, 0}));
}

TEST_CASE("complete graphs give symmetric groups") {
  for (std::uint32_t n = 1; n <= 12; ++n) CHECK(automorphism_group(complete(n)).order() == BigInt(oracle::factorial(n)));
  CHECK(automorphism_group(complete(4)).order() == 24);
}

TEST_CASE("refinement") {
  const auto k5 = complete(5);
  const auto r = color_refinement(k5, Coloring::uniform(5));
  CHECK(r.cells == 1);

  // A path 0-1-2 with edge colors: ends have a different profile from the middle.
  ColorGraph path(3, {0, 1, 2, 1, 0, 1, 2, 1, 0});
  const auto split = color_refinement(path, Coloring::uniform(3));
  CHECK(split.cells == 2);
  CHECK(split.cell_of[0] == split.cell_of[2]);
  CHECK(split.cell_of[0] != split.cell_of[1]);

  const auto graph = scheme_graph(build_schur_basis(wielandt()));
  const auto base = color_refinement(graph, Coloring::uniform(25));
  CHECK(base.cells == 1);
  const auto ind = color_refinement(graph, individualize(base, 0));
  // Individualizing 0 separates at least its color shells.
  CHECK(ind.cells >= 5);
  for (std::uint32_t u = 1; u < 25; ++u)
    for (std::uint32_t v = 1; v < 25; ++v)
      if (ind.cell_of[u] == ind.cell_of[v]) CHECK(graph.color(0, u) == graph.color(0, v));
  // Idempotent on its own output.
  const auto again = color_refinement(graph, ind);
  CHECK(labels(again) == labels(ind));
  CHECK(again.cells == ind.cells);
}

TEST_CASE("one-class scheme over GF(5)") {
  const auto graph = scheme_graph(build_schur_basis(LinePartition::one_class(GaloisField::make(5, 1))));
  const auto g = automorphism_group(graph);
  CHECK(g.order_string() == "15511210043330985984000000");
  CHECK(g.order() == BigInt(25) * g.point_stabilizer(0).order());
}

TEST_CASE("generators preserve colors and contain the translations") {
  for (auto [p, e] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
    auto f = GaloisField::make(p, e);
    Plane plane(f);
    for (const auto& pi : all_partitions(f)) {
      const auto graph = scheme_graph(build_schur_basis(pi));
      const auto result = automorphism_search(graph);
      for (const auto& g : result.group.generators()) REQUIRE(graph.preserves(g));
      for (std::uint32_t t = 0; t < plane.size(); ++t) REQUIRE(result.group.contains(translation(plane, t)));
    }
  }
  auto f9 = GaloisField::make(3, 2);
  Plane plane(f9);
  const auto graph = scheme_graph(build_schur_basis(LinePartition::singletons(f9)));
  const auto g = automorphism_group(graph);
  for (std::uint32_t t = 0; t < plane.size(); ++t) CHECK(g.contains(translation(plane, t)));
}

TEST_CASE("orders agree with exhaustive backtracking at q = 3") {
  auto f = GaloisField::make(3, 1);
  for (const auto& pi : all_partitions(f)) {
    const auto graph = scheme_graph(build_schur_basis(pi));
    CHECK_MESSAGE(automorphism_group(graph).order() == BigInt(oracle::count_automorphisms(naive_graph(graph))),
                  pi.literal());
  }
}

TEST_CASE("Wielandt scheme") {
  const auto graph = scheme_graph(build_schur_basis(wielandt()));
  const auto g = automorphism_group(graph);
  CHECK(g.order() == 100);
  CHECK(g.point_stabilizer(0).order() == 4);
  CHECK(oracle::count_automorphisms(naive_graph(graph)) == 100);
  // Exhaustive backtracking finds the same stabilizer orbits.
  CHECK(oracle::stabilizer_orbit_sizes(naive_graph(graph)) == std::vector<std::size_t>{1, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("singleton scheme over GF(5): stabilizer orbits are the punctured lines") {
  auto f = GaloisField::make(5, 1);
  const auto basis = build_schur_basis(LinePartition::singletons(f));
  const auto g = automorphism_group(scheme_graph(basis));
  const auto stab = g.point_stabilizer(0);
  auto orbits = stab.orbits();
  auto classes = basis.classes();
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(orbits.begin(), orbits.end());
  std::sort(classes.begin(), classes.end());
  CHECK(orbits == classes);
}

TEST_CASE("search is deterministic") {
  const auto graph = scheme_graph(build_schur_basis(wielandt()));
  const auto a = automorphism_search(graph);
  const auto b = automorphism_search(graph);
  CHECK(a.group.order() == b.group.order());
  CHECK(a.group.generators() == b.group.generators());
  CHECK(a.base == b.base);
  CHECK(a.group.point_stabilizer(0).orbits() == b.group.point_stabilizer(0).orbits());
}

TEST_CASE("trace output and the size cap") {
  const auto graph = scheme_graph(build_schur_basis(LinePartition::singletons(GaloisField::make(3, 1))));
  std::ostringstream trace;
  AutomorphismOptions opts;
  opts.trace = &trace;
  automorphism_search(graph, opts);
  CHECK_FALSE(trace.str().empty());
  opts.trace = nullptr;
  opts.oracle_cap = 8;
  CHECK_THROWS_AS(automorphism_search(graph, opts), SizingError);
}
