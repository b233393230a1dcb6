#pragma once

// Color-preserving automorphisms of edge-colored complete graphs, found by
// individualization-refinement with orbit pruning.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "schurring/perm.hpp"

namespace schurring {

inline constexpr std::uint32_t kDefaultOracleCap = 100;

/// Symmetric n x n color matrix.  The diagonal carries one color that never
/// appears off the diagonal.
class ColorGraph {
 public:
  /// Throws PreconditionError for asymmetric input or a diagonal color reused off-diagonal.
  ColorGraph(std::uint32_t n, std::vector<std::uint8_t> colors);

  std::uint32_t size() const { return n_; }
  std::uint8_t color(std::uint32_t u, std::uint32_t v) const { return colors_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::uint8_t* row(std::uint32_t u) const { return colors_.data() + static_cast<std::size_t>(u) * n_; }

  bool preserves(const Permutation& g) const;

 private:
  std::uint32_t n_;
  std::vector<std::uint8_t> colors_;
};

/// An ordered partition of the vertices: cell_of[v] is the position of v's cell.
struct Coloring {
  std::vector<std::uint32_t> cell_of;
  std::uint32_t cells = 0;
  /// Hash of the refinement history; equal for nodes related by an automorphism.
  std::uint64_t trace = 0;

  static Coloring uniform(std::uint32_t n);
  /// Cells ordered by label value.
  static Coloring from_labels(const std::vector<std::uint32_t>& labels);

  bool discrete() const { return cells == cell_of.size(); }
  std::vector<std::uint32_t> cell_sizes() const;
};

/// Splits cells by the multiset of (edge color, neighbor cell) pairs until
/// stable.  Cell order depends only on isomorphism-invariant data, so the
/// result is equivariant under automorphisms that respect `initial`.
Coloring color_refinement(const ColorGraph& graph, Coloring initial);

/// Moves `vertex` into a new singleton cell placed just before the rest of its cell.
Coloring individualize(const Coloring& coloring, std::uint32_t vertex);

struct AutomorphismOptions {
  std::uint32_t oracle_cap = kDefaultOracleCap;
  /// Refinement trace dump when non-null.
  std::ostream* trace = nullptr;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned = 0;
  std::uint64_t failed_candidates = 0;
};

struct AutomorphismResult {
  PermutationGroup group;
  /// Base points of the first path, in order.
  std::vector<std::uint32_t> base;
  SearchStats stats;
};

/// Full color-preserving automorphism group.  The returned generators form a
/// strong generating set relative to `base`.  Throws SizingError above the cap.
AutomorphismResult automorphism_search(const ColorGraph& graph, const AutomorphismOptions& options = {});

inline PermutationGroup automorphism_group(const ColorGraph& graph, const AutomorphismOptions& options = {}) {
  return automorphism_search(graph, options).group;
}

}  // namespace schurring
