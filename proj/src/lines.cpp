#include "schurring/lines.hpp"

#include <algorithm>

#include "schurring/errors.hpp"

namespace schurring {

// ---------------------------------------------------------------------------
// Plane

Plane::Plane(GaloisField field) : field_(std::move(field)) {}

std::uint32_t Plane::add(std::uint32_t a, std::uint32_t b) const {
  const Point u = point(a), v = point(b);
  return index({field_.add(u.x, v.x), field_.add(u.y, v.y)});
}

std::uint32_t Plane::neg(std::uint32_t a) const {
  const Point u = point(a);
  return index({field_.neg(u.x), field_.neg(u.y)});
}

std::uint32_t Plane::scale(FieldElement c, std::uint32_t a) const {
  const Point u = point(a);
  return index({field_.mul(c, u.x), field_.mul(c, u.y)});
}

Slope Plane::slope_of(std::uint32_t index) const {
  const Point pt = point(index);
  if (pt.x.index == 0) {
    if (pt.y.index == 0) throw PreconditionError("slope_of: the origin lies on every line");
    return Slope::infinity();
  }
  return Slope::finite(field_.div(pt.y, pt.x));
}

std::vector<Slope> Plane::slopes() const {
  std::vector<Slope> out;
  out.reserve(q() + 1);
  for (std::uint32_t i = 0; i < q(); ++i) out.push_back(Slope::finite({i}));
  out.push_back(Slope::infinity());
  return out;
}

std::vector<int> Plane::coordinates(std::uint32_t index) const {
  const Point pt = point(index);
  const int e = field_.e();
  std::vector<int> coords(static_cast<std::size_t>(2 * e));
  for (int i = 0; i < e; ++i) {
    coords[static_cast<std::size_t>(i)] = field_.digit(pt.x, i);
    coords[static_cast<std::size_t>(e + i)] = field_.digit(pt.y, i);
  }
  return coords;
}

std::uint32_t Plane::from_coordinates(const std::vector<int>& coords) const {
  const int e = field_.e();
  if (coords.size() != static_cast<std::size_t>(2 * e)) throw PreconditionError("from_coordinates: expected 2e digits");
  const std::span<const int> all(coords);
  return index({field_.from_digits(all.first(static_cast<std::size_t>(e))),
                field_.from_digits(all.last(static_cast<std::size_t>(e)))});
}

// ---------------------------------------------------------------------------
// Lines

std::vector<Point> line_points(const GaloisField& field, Slope s) {
  if (!s.is_infinite() && !field.contains(s.value())) throw PreconditionError("slope outside the field");
  std::vector<Point> out;
  out.reserve(field.q());
  for (std::uint32_t i = 0; i < field.q(); ++i) {
    const FieldElement x{i};
    out.push_back(s.is_infinite() ? Point{field.zero(), x} : Point{x, field.mul(s.value(), x)});
  }
  return out;
}

std::vector<Point> punctured_line(const GaloisField& field, Slope s) {
  auto pts = line_points(field, s);
  pts.erase(pts.begin());
  return pts;
}

// ---------------------------------------------------------------------------
// LinePartition

LinePartition::LinePartition(GaloisField field, std::vector<std::vector<Slope>> classes)
    : field_(std::move(field)), classes_(std::move(classes)) {
  const std::uint32_t q = field_.q();
  class_of_dense_.assign(q + 1, 0xFFFFFFFFu);
  for (auto& cls : classes_) {
    if (cls.empty()) throw PreconditionError("partition class is empty");
    std::sort(cls.begin(), cls.end());
  }
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (Slope s : classes_[c]) {
      if (!s.is_infinite() && !field_.contains(s.value())) {
        throw PreconditionError("slope " + s.literal() + " outside GF(" + field_.spec().literal() + ")");
      }
      auto& slot = class_of_dense_[s.dense(q)];
      if (slot != 0xFFFFFFFFu) throw PreconditionError("slope " + s.literal() + " appears twice");
      slot = static_cast<std::uint32_t>(c);
    }
  }
  for (std::uint32_t d = 0; d <= q; ++d) {
    if (class_of_dense_[d] == 0xFFFFFFFFu) {
      throw PreconditionError("slope " + Slope::from_dense(d, q).literal() + " missing from partition");
    }
  }
}

LinePartition LinePartition::singletons(const GaloisField& field) {
  std::vector<std::vector<Slope>> classes;
  for (Slope s : Plane(field).slopes()) classes.push_back({s});
  return {field, std::move(classes)};
}

LinePartition LinePartition::one_class(const GaloisField& field) { return {field, {Plane(field).slopes()}}; }

std::size_t LinePartition::class_of(Slope s) const { return class_of_dense_.at(s.dense(field_.q())); }

std::string LinePartition::literal() const {
  std::string out;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c) out += '|';
    for (std::size_t i = 0; i < classes_[c].size(); ++i) {
      if (i) out += ',';
      out += classes_[c][i].literal();
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> induced_partition(const LinePartition& pi) {
  const Plane plane(pi.field());
  std::vector<std::vector<std::uint32_t>> blocks(pi.rank() + 1);
  blocks[0].push_back(0);
  for (std::size_t c = 0; c < pi.rank(); ++c) {
    for (Slope s : pi.classes()[c]) {
      for (Point pt : punctured_line(pi.field(), s)) blocks[c + 1].push_back(plane.index(pt));
    }
    std::sort(blocks[c + 1].begin(), blocks[c + 1].end());
  }
  return blocks;
}

std::vector<Slope> singleton_slopes(const LinePartition& pi) {
  std::vector<Slope> out;
  for (const auto& cls : pi.classes()) {
    if (cls.size() == 1) out.push_back(cls.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool condition_holds(const LinePartition& pi) {
  const auto m = singleton_slopes(pi);
  const auto has = [&](Slope s) { return std::binary_search(m.begin(), m.end(), s); };
  const GaloisField& f = pi.field();
  if (!has(Slope::infinity()) || !has(Slope::finite(f.zero())) || !has(Slope::finite(f.one()))) return false;
  std::vector<FieldElement> finite;
  for (Slope s : m) {
    if (!s.is_infinite()) finite.push_back(s.value());
  }
  return !f.is_subfield(finite);
}

// ---------------------------------------------------------------------------
// Moebius normalization

Point apply_to_point(const GaloisField& f, const PlaneMap& g, Point pt) {
  return {f.add(f.mul(g.a, pt.x), f.mul(g.b, pt.y)), f.add(f.mul(g.c, pt.x), f.mul(g.d, pt.y))};
}

Slope apply_to_slope(const GaloisField& f, const PlaneMap& g, Slope s) {
  const Point direction = s.is_infinite() ? Point{f.zero(), f.one()} : Point{f.one(), s.value()};
  const Point image = apply_to_point(f, g, direction);
  if (image.x.index == 0) {
    if (image.y.index == 0) throw PreconditionError("apply_to_slope: singular plane map");
    return Slope::infinity();
  }
  return Slope::finite(f.div(image.y, image.x));
}

namespace {

// Plane map whose slope action sends alpha -> inf, beta -> 0, gamma -> 1.
PlaneMap cross_ratio_map(const GaloisField& f, Slope alpha, Slope beta, Slope gamma) {
  const auto sub = [&](Slope u, Slope v) { return f.sub(u.value(), v.value()); };
  if (alpha.is_infinite()) {
    return {sub(gamma, beta), f.zero(), f.neg(beta.value()), f.one()};
  }
  if (beta.is_infinite()) {
    return {f.neg(alpha.value()), f.one(), sub(gamma, alpha), f.zero()};
  }
  if (gamma.is_infinite()) {
    return {f.neg(alpha.value()), f.one(), f.neg(beta.value()), f.one()};
  }
  const FieldElement gb = sub(gamma, beta), ga = sub(gamma, alpha);
  return {f.neg(f.mul(alpha.value(), gb)), gb, f.neg(f.mul(beta.value(), ga)), ga};
}

}  // namespace

std::optional<MobiusNormalization> mobius_normalize(const LinePartition& pi) {
  const auto m = singleton_slopes(pi);
  if (m.size() < 3) return std::nullopt;
  std::array<Slope, 3> pivots{m[0], m[1], m[2]};
  if (m.back().is_infinite()) pivots = {m.back(), m[0], m[1]};

  const GaloisField& f = pi.field();
  const PlaneMap g = cross_ratio_map(f, pivots[0], pivots[1], pivots[2]);
  std::vector<std::vector<Slope>> classes;
  for (const auto& cls : pi.classes()) {
    auto& image = classes.emplace_back();
    for (Slope s : cls) image.push_back(apply_to_slope(f, g, s));
  }
  return MobiusNormalization{LinePartition(f, std::move(classes)), pivots, g};
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t bell_number(unsigned n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

void enumerate_partitions(const GaloisField& field, const PartitionFilter& filter, const PartitionVisitor& visit,
                          std::size_t census_cap) {
  const std::uint32_t q = field.q();
  const std::size_t n = q + 1;
  if (n > census_cap) {
    throw SizingError("enumerate_partitions: " + std::to_string(n) + " slopes exceed census cap " +
                      std::to_string(census_cap));
  }
  // Restricted growth string a with a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
  while (true) {
    std::size_t blocks = prefix_max[n - 1] + 1;
    std::vector<std::vector<Slope>> classes(blocks);
    for (std::size_t i = 0; i < n; ++i) classes[a[i]].push_back(Slope::from_dense(static_cast<std::uint32_t>(i), q));
    LinePartition pi(field, std::move(classes));
    if (!filter || filter(pi)) visit(pi);

    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<LinePartition> all_partitions(const GaloisField& field, const PartitionFilter& filter,
                                          std::size_t census_cap) {
  std::vector<LinePartition> out;
  enumerate_partitions(field, filter, [&](const LinePartition& pi) { out.push_back(pi); }, census_cap);
  return out;
}

}  // namespace schurring
