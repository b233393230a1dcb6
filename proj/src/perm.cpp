#include "schurring/perm.hpp"

#include <algorithm>
#include <numeric>

#include "schurring/errors.hpp"

namespace schurring {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("Permutation: images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  Permutation id;
  id.images_.resize(n);
  std::iota(id.images_.begin(), id.images_.end(), 0u);
  return id;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> orbits(std::uint32_t n, const std::vector<Permutation>& generators) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int64_t> slot(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

PermutationGroup::PermutationGroup(std::uint32_t n) : degree_(n) {}

PermutationGroup::PermutationGroup(std::uint32_t n, std::vector<Permutation> generators,
                                   std::vector<std::uint32_t> base_prefix)
    : degree_(n) {
  for (auto& g : generators) {
    if (g.degree() != n) throw PreconditionError("PermutationGroup: generator of the wrong degree");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> base;
  for (std::uint32_t b : base_prefix) {
    if (b >= n || used[b]) throw PreconditionError("PermutationGroup: invalid base prefix");
    used[b] = 1;
    base.push_back(b);
  }
  for (std::uint32_t x = 0; x < n; ++x)
    if (!used[x]) base.push_back(x);

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base_point = base[i];
    for (const auto& g : generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base[j]] == base[j];
      if (fixes) levels_[i].generators.push_back(g);
    }
    build_level(levels_[i]);
  }
  schreier_sims();
}

PermutationGroup PermutationGroup::from_strong_generators(std::uint32_t n, std::vector<std::uint32_t> base,
                                                          std::vector<Permutation> strong_generators) {
  PermutationGroup group;
  group.degree_ = n;
  for (auto& g : strong_generators) {
    if (g.degree() != n) throw PreconditionError("from_strong_generators: generator of the wrong degree");
    if (!g.is_identity()) group.generators_.push_back(std::move(g));
  }
  group.levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] >= n) throw PreconditionError("from_strong_generators: base point out of range");
    group.levels_[i].base_point = base[i];
    for (const auto& g : group.generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base[j]] == base[j];
      if (fixes) group.levels_[i].generators.push_back(g);
    }
    group.build_level(group.levels_[i]);
  }
  return group;
}

void PermutationGroup::build_level(ChainLevel& level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.slot[level.base_point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const std::uint32_t delta = level.orbit[head];
    for (const auto& g : level.generators) {
      const std::uint32_t image = g[delta];
      if (level.slot[image] >= 0) continue;
      level.slot[image] = static_cast<std::int32_t>(level.transversal.size());
      level.transversal.push_back(level.transversal[static_cast<std::size_t>(level.slot[delta])] * g);
      level.orbit.push_back(image);
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::strip(Permutation g, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const ChainLevel& level = levels_[i];
    const std::uint32_t image = g[level.base_point];
    const std::int32_t s = level.slot[image];
    if (s < 0) return {std::move(g), i};
    g = g * level.transversal[static_cast<std::size_t>(s)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::schreier_sims() {
  if (levels_.empty()) return;
  std::size_t i = levels_.size() - 1;
  while (true) {
    bool extended = false;
    const ChainLevel& level = levels_[i];
    for (std::size_t o = 0; o < level.orbit.size() && !extended; ++o) {
      const std::uint32_t beta = level.orbit[o];
      const Permutation& u_beta = level.transversal[static_cast<std::size_t>(level.slot[beta])];
      for (std::size_t gi = 0; gi < level.generators.size() && !extended; ++gi) {
        const Permutation& x = level.generators[gi];
        const std::uint32_t gamma = x[beta];
        Permutation h = u_beta * x * level.transversal[static_cast<std::size_t>(level.slot[gamma])].inverse();
        if (h.is_identity()) continue;
        auto [residue, stop] = strip(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        if (stop >= levels_.size()) throw Error("schreier_sims: residue survives a complete base");
        for (std::size_t l = i + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          build_level(levels_[l]);
        }
        i = stop;
        extended = true;
      }
    }
    if (!extended) {
      if (i == 0) break;
      --i;
    }
  }
}

std::vector<std::uint32_t> PermutationGroup::base() const {
  std::vector<std::uint32_t> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

BigInt PermutationGroup::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= static_cast<unsigned>(level.orbit.size());
  return result;
}

std::string PermutationGroup::order_string() const { return order().str(); }

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = strip(g, 0);
  return residue.is_identity();
}

PermutationGroup PermutationGroup::point_stabilizer(std::uint32_t point) const {
  if (point >= degree_) throw PreconditionError("point_stabilizer: point out of range");
  if (levels_.empty() || levels_.front().base_point != point) {
    return PermutationGroup(degree_, generators_, {point}).point_stabilizer(point);
  }
  PermutationGroup stabilizer;
  stabilizer.degree_ = degree_;
  stabilizer.levels_.assign(levels_.begin() + 1, levels_.end());
  if (!stabilizer.levels_.empty()) stabilizer.generators_ = stabilizer.levels_.front().generators;
  return stabilizer;
}

}  // namespace schurring
