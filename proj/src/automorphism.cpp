#include "schurring/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>

#include "schurring/errors.hpp"

namespace schurring {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) { return mix(seed ^ mix(value)); }

}  // namespace

ColorGraph::ColorGraph(std::uint32_t n, std::vector<std::uint8_t> colors) : n_(n), colors_(std::move(colors)) {
  if (colors_.size() != static_cast<std::size_t>(n) * n) throw PreconditionError("ColorGraph: matrix size mismatch");
  if (n == 0) return;
  const std::uint8_t diagonal = color(0, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    if (color(u, u) != diagonal) throw PreconditionError("ColorGraph: diagonal is not uniformly colored");
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (color(u, v) != color(v, u)) throw PreconditionError("ColorGraph: color matrix is not symmetric");
      if (color(u, v) == diagonal) throw PreconditionError("ColorGraph: diagonal color used off the diagonal");
    }
  }
}

bool ColorGraph::preserves(const Permutation& g) const {
  if (g.degree() != n_) return false;
  for (std::uint32_t u = 0; u < n_; ++u) {
    const std::uint8_t* source = row(u);
    const std::uint8_t* target = row(g[u]);
    for (std::uint32_t v = u + 1; v < n_; ++v) {
      if (source[v] != target[g[v]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Coloring Coloring::uniform(std::uint32_t n) {
  Coloring c;
  c.cell_of.assign(n, 0);
  c.cells = n == 0 ? 0 : 1;
  return c;
}

Coloring Coloring::from_labels(const std::vector<std::uint32_t>& labels) {
  std::vector<std::uint32_t> distinct(labels);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring c;
  c.cells = static_cast<std::uint32_t>(distinct.size());
  for (std::uint32_t label : labels) {
    c.cell_of.push_back(static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), label) - distinct.begin()));
  }
  for (std::uint32_t label : distinct) c.trace = combine(c.trace, label);
  return c;
}

std::vector<std::uint32_t> Coloring::cell_sizes() const {
  std::vector<std::uint32_t> sizes(cells, 0);
  for (std::uint32_t c : cell_of) ++sizes[c];
  return sizes;
}

Coloring color_refinement(const ColorGraph& graph, Coloring coloring) {
  const std::uint32_t n = graph.size();
  if (coloring.cell_of.size() != n) throw PreconditionError("color_refinement: coloring of the wrong size");
  std::vector<std::uint64_t> signature(n);
  std::vector<std::uint32_t> order(n);
  while (true) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint8_t* row = graph.row(v);
      std::uint64_t s = 0;
      for (std::uint32_t u = 0; u < n; ++u) {
        if (u != v) s += mix((static_cast<std::uint64_t>(coloring.cell_of[u]) << 8) | row[u]);
      }
      signature[v] = s;
    }
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (coloring.cell_of[a] != coloring.cell_of[b]) return coloring.cell_of[a] < coloring.cell_of[b];
      return signature[a] < signature[b];
    });

    std::vector<std::uint32_t> next(n);
    std::uint32_t cells = 0;
    std::uint64_t multiplicity = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t v = order[i];
      const bool fresh = i == 0 || coloring.cell_of[v] != coloring.cell_of[order[i - 1]] ||
                         signature[v] != signature[order[i - 1]];
      if (fresh) {
        if (i > 0) coloring.trace = combine(coloring.trace, multiplicity);
        coloring.trace = combine(combine(coloring.trace, coloring.cell_of[v]), signature[v]);
        multiplicity = 0;
        ++cells;
      }
      ++multiplicity;
      next[v] = cells - 1;
    }
    coloring.trace = combine(coloring.trace, multiplicity);
    const bool stable = cells == coloring.cells;
    coloring.cell_of = std::move(next);
    coloring.cells = cells;
    if (stable) return coloring;
  }
}

Coloring individualize(const Coloring& coloring, std::uint32_t vertex) {
  Coloring out = coloring;
  const std::uint32_t target = coloring.cell_of.at(vertex);
  for (std::uint32_t v = 0; v < out.cell_of.size(); ++v) {
    std::uint32_t& c = out.cell_of[v];
    if (c > target || (c == target && v != vertex)) ++c;
  }
  ++out.cells;
  out.trace = combine(out.trace, 0x1000000ULL + target);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class Search {
 public:
  Search(const ColorGraph& graph, const AutomorphismOptions& options) : graph_(graph), options_(options) {}

  AutomorphismResult run() {
    const std::uint32_t n = graph_.size();
    build_first_path();

    std::vector<Permutation> generators;
    const std::size_t depth = base_.size();
    for (std::size_t level = depth; level-- > 0;) {
      const Coloring& node = path_[level];
      const std::uint32_t cell = target_cell_[level];
      const std::uint32_t b = base_[level];

      std::vector<std::uint32_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0u);
      const auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      const auto absorb = [&](const Permutation& g) {
        for (std::uint32_t x = 0; x < n; ++x) {
          const std::uint32_t ra = find(x), rb = find(g[x]);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      };
      for (const auto& g : generators) absorb(g);

      std::vector<std::uint32_t> failed;
      for (std::uint32_t v = 0; v < n; ++v) {
        if (node.cell_of[v] != cell || v == b) continue;
        if (find(v) == find(b)) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](std::uint32_t f) { return find(f) == find(v); })) continue;
        if (options_.trace) *options_.trace << "level " << level << ": try " << b << " -> " << v << '\n';
        auto g = dfs(level + 1, color_refinement(graph_, individualize(node, v)));
        if (g) {
          if (options_.trace) *options_.trace << "level " << level << ": automorphism found\n";
          absorb(*g);
          generators.push_back(std::move(*g));
        } else {
          ++stats_.failed_candidates;
          failed.push_back(v);
        }
      }
    }

    for (const auto& g : generators) {
      if (!graph_.preserves(g)) throw Error("automorphism_search: emitted generator does not preserve colors");
    }
    AutomorphismResult result{PermutationGroup::from_strong_generators(n, base_, std::move(generators)), base_,
                              stats_};
    return result;
  }

 private:
  void build_first_path() {
    const std::uint32_t n = graph_.size();
    path_.push_back(color_refinement(graph_, Coloring::uniform(n)));
    while (!path_.back().discrete()) {
      const Coloring& node = path_.back();
      const auto sizes = node.cell_sizes();
      const auto cell = static_cast<std::uint32_t>(
          std::find_if(sizes.begin(), sizes.end(), [](std::uint32_t s) { return s > 1; }) - sizes.begin());
      std::uint32_t vertex = 0;
      while (node.cell_of[vertex] != cell) ++vertex;
      target_cell_.push_back(cell);
      base_.push_back(vertex);
      if (options_.trace) {
        *options_.trace << "first path level " << base_.size() - 1 << ": cells " << node.cells << ", individualize "
                        << vertex << " in cell " << cell << '\n';
      }
      path_.push_back(color_refinement(graph_, individualize(node, vertex)));
    }
    leaf_vertex_.assign(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) leaf_vertex_[path_.back().cell_of[v]] = v;
  }

  std::optional<Permutation> dfs(std::size_t level, const Coloring& node) {
    ++stats_.nodes;
    const Coloring& reference = path_[level];
    if (node.cells != reference.cells || node.trace != reference.trace) {
      ++stats_.pruned;
      return std::nullopt;
    }
    if (node.discrete()) {
      ++stats_.leaves;
      std::vector<std::uint32_t> images(node.cell_of.size());
      for (std::uint32_t v = 0; v < images.size(); ++v) images[leaf_vertex_[node.cell_of[v]]] = v;
      Permutation g(std::move(images));
      if (graph_.preserves(g)) return g;
      return std::nullopt;
    }
    const std::uint32_t cell = target_cell_[level];
    for (std::uint32_t w = 0; w < node.cell_of.size(); ++w) {
      if (node.cell_of[w] != cell) continue;
      if (auto g = dfs(level + 1, color_refinement(graph_, individualize(node, w)))) return g;
    }
    return std::nullopt;
  }

  const ColorGraph& graph_;
  const AutomorphismOptions& options_;
  std::vector<Coloring> path_;
  std::vector<std::uint32_t> target_cell_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> leaf_vertex_;
  SearchStats stats_;
};

}  // namespace

AutomorphismResult automorphism_search(const ColorGraph& graph, const AutomorphismOptions& options) {
  if (graph.size() > options.oracle_cap) {
    throw SizingError("automorphism_search: " + std::to_string(graph.size()) + " vertices exceed oracle cap " +
                      std::to_string(options.oracle_cap));
  }
  return Search(graph, options).run();
}

}  // namespace schurring
