#include "schurring/schurian.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "schurring/errors.hpp"

namespace schurring {

std::string to_string(OracleVerdict v) { return v == OracleVerdict::schurian ? "schurian" : "non_schurian"; }

std::string to_string(CriterionVerdict v) {
  return v == CriterionVerdict::predicts_nonschurian ? "predicts_nonschurian" : "no_prediction";
}

ColorGraph scheme_graph(const SchurBasis& basis) {
  if (basis.rank() > 255) throw SizingError("scheme_graph: more than 255 classes");
  const Plane plane(basis.field());
  const std::uint32_t n = plane.size();
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(n) * n);
  for (std::uint32_t g = 0; g < n; ++g) {
    const std::uint32_t minus_g = plane.neg(g);
    for (std::uint32_t h = 0; h < n; ++h) {
      colors[static_cast<std::size_t>(g) * n + h] = static_cast<std::uint8_t>(basis.class_of(plane.add(h, minus_g)));
    }
  }
  return {n, std::move(colors)};
}

CriterionVerdict criterion(const LinePartition& pi) {
  return condition_holds(pi) ? CriterionVerdict::predicts_nonschurian : CriterionVerdict::no_prediction;
}

SchurianReport is_schurian(const LinePartition& pi, const OracleOptions& options) {
  const std::uint32_t n = pi.field().q() * pi.field().q();
  if (n > options.oracle_cap) {
    throw SizingError("is_schurian: q^2 = " + std::to_string(n) + " exceeds oracle cap " +
                      std::to_string(options.oracle_cap));
  }
  const SchurBasis basis = build_schur_basis(pi);
  const ColorGraph graph = scheme_graph(basis);
  AutomorphismOptions search_options;
  search_options.oracle_cap = options.oracle_cap;
  const AutomorphismResult aut = automorphism_search(graph, search_options);
  const PermutationGroup stabilizer = aut.group.point_stabilizer(0);

  SchurianReport report{pi, basis.rank(), aut.group.order_string(), {}, {}, OracleVerdict::schurian,
                        criterion(pi), true};
  const auto stabilizer_orbits = orbits(n, stabilizer.generators());
  for (const auto& orbit : stabilizer_orbits) {
    const std::size_t cls = basis.class_of(orbit.front());
    for (std::uint32_t g : orbit) {
      if (basis.class_of(g) != cls) throw Error("is_schurian: a stabilizer orbit meets two classes");
    }
    report.stabilizer_orbit_sizes.push_back(orbit.size());
  }
  report.class_sizes = basis.class_sizes();
  std::sort(report.stabilizer_orbit_sizes.begin(), report.stabilizer_orbit_sizes.end());
  std::sort(report.class_sizes.begin(), report.class_sizes.end());
  report.oracle_verdict =
      stabilizer_orbits.size() == basis.rank() ? OracleVerdict::schurian : OracleVerdict::non_schurian;
  report.consistent = !(report.criterion_verdict == CriterionVerdict::predicts_nonschurian &&
                        report.oracle_verdict == OracleVerdict::schurian);
  return report;
}

// ---------------------------------------------------------------------------
// LinearMap2e

LinearMap2e::LinearMap2e(const GaloisField& field, FpMatrix matrix) : plane_(field), matrix_(std::move(matrix)) {
  const int n = 2 * field.e();
  if (matrix_.rows() != n || matrix_.cols() != n || matrix_.modulus() != field.p()) {
    throw PreconditionError("LinearMap2e: expected a 2e x 2e matrix over F_p");
  }
  if (!matrix_.is_invertible()) throw PreconditionError("LinearMap2e: matrix is singular");
}

LinearMap2e LinearMap2e::from_basis_images(const GaloisField& field, const std::vector<std::uint32_t>& images) {
  const Plane plane(field);
  const int n = 2 * field.e();
  if (images.size() != static_cast<std::size_t>(n)) throw PreconditionError("from_basis_images: expected 2e images");
  FpMatrix m(n, n, field.p());
  for (int k = 0; k < n; ++k) {
    const auto coords = plane.coordinates(images[static_cast<std::size_t>(k)]);
    for (int r = 0; r < n; ++r) m.set(r, k, coords[static_cast<std::size_t>(r)]);
  }
  return {field, std::move(m)};
}

namespace {

// Basis vector k: zeta^k x for k < e, zeta^{k-e} y otherwise.
Point basis_point(const GaloisField& field, int k) {
  const int e = field.e();
  const FieldElement power = field.pow(field.zeta(), static_cast<std::uint64_t>(k % e));
  return k < e ? Point{power, field.zero()} : Point{field.zero(), power};
}

}  // namespace

LinearMap2e LinearMap2e::from_plane_map(const GaloisField& field, const PlaneMap& g) {
  const Plane plane(field);
  std::vector<std::uint32_t> images;
  for (int k = 0; k < 2 * field.e(); ++k) images.push_back(plane.index(apply_to_point(field, g, basis_point(field, k))));
  return from_basis_images(field, images);
}

LinearMap2e LinearMap2e::scalar(const GaloisField& field, FieldElement c) {
  return from_plane_map(field, {c, field.zero(), field.zero(), c});
}

LinearMap2e LinearMap2e::frobenius(const GaloisField& field) {
  const Plane plane(field);
  std::vector<std::uint32_t> images;
  for (int k = 0; k < 2 * field.e(); ++k) {
    const Point pt = basis_point(field, k);
    images.push_back(plane.index({field.frobenius(pt.x), field.frobenius(pt.y)}));
  }
  return from_basis_images(field, images);
}

std::uint32_t LinearMap2e::apply(std::uint32_t point) const {
  const auto coords = plane_.coordinates(point);
  const int n = matrix_.rows();
  const int p = matrix_.modulus();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    int acc = 0;
    for (int c = 0; c < n; ++c) acc += matrix_.at(r, c) * coords[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc % p;
  }
  return plane_.from_coordinates(out);
}

Permutation LinearMap2e::permutation() const {
  std::vector<std::uint32_t> images(plane_.size());
  for (std::uint32_t pt = 0; pt < plane_.size(); ++pt) images[pt] = apply(pt);
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Invariant slopes and the reference-line blocks

namespace {

bool line_invariant(const GaloisField& field, const std::vector<std::uint32_t>& images, Slope s) {
  const Plane plane(field);
  for (Point pt : punctured_line(field, s)) {
    if (plane.slope_of(images[plane.index(pt)]) != s) return false;
  }
  return true;
}

}  // namespace

std::vector<Slope> invariant_slopes(const GaloisField& field, const LinearMap2e& sigma) {
  const auto images = sigma.permutation().images();
  std::vector<Slope> out;
  for (Slope s : Plane(field).slopes()) {
    if (line_invariant(field, images, s)) out.push_back(s);
  }
  return out;
}

FixingMapReport verify_fixing_map(const GaloisField& field, const LinearMap2e& sigma) {
  const Plane plane(field);
  const auto images = sigma.permutation().images();
  const Slope zero = Slope::finite(field.zero()), one = Slope::finite(field.one()), inf = Slope::infinity();
  for (Slope s : {zero, one, inf}) {
    if (!line_invariant(field, images, s)) {
      throw PreconditionError("verify_fixing_map: sigma does not preserve L_" + s.literal());
    }
  }

  FixingMapReport report;
  const int e = field.e();
  report.a = FpMatrix(e, e, field.p());
  report.b = FpMatrix(e, e, field.p());
  report.c = FpMatrix(e, e, field.p());
  for (int j = 0; j < e; ++j) {
    const FieldElement zj = field.pow(field.zeta(), static_cast<std::uint64_t>(j));
    const Point ax = plane.point(images[plane.index({zj, field.zero()})]);
    const Point by = plane.point(images[plane.index({field.zero(), zj})]);
    const Point cxy = plane.point(images[plane.index({zj, zj})]);
    for (int k = 0; k < e; ++k) {
      report.a.set(j, k, field.digit(ax.x, k));
      report.b.set(j, k, field.digit(by.y, k));
      report.c.set(j, k, field.digit(cxy.x, k));
    }
  }
  report.blocks_equal = report.a == report.b && report.b == report.c;
  if (!report.blocks_equal) {
    report.detail = "blocks differ: A=" + report.a.to_string() + " B=" + report.b.to_string() +
                    " C=" + report.c.to_string();
  }

  report.invariant = invariant_slopes(field, sigma);
  for (Slope s : report.invariant) {
    if (!s.is_infinite()) report.finite_invariant.push_back(s.value());
  }
  report.subfield = field.is_subfield(report.finite_invariant);
  if (!report.subfield && report.detail.empty()) report.detail = "invariant finite slopes are not a subfield";

  report.commutes = true;
  for (FieldElement alpha : report.finite_invariant) {
    const FpMatrix psi = field.regular_representation(alpha);
    if (!(report.a * psi == psi * report.a)) {
      report.commutes = false;
      if (report.detail.empty()) report.detail = "A does not commute with Psi(" + std::to_string(alpha.index) + ")";
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration of label-preserving linear maps

namespace {

// Depth-first choice of basis images; every point of the span built so far
// must keep its label, which prunes most of GL(2e, p).
class PreservingEnumerator {
 public:
  PreservingEnumerator(const GroupAlgebra& algebra, const std::vector<std::uint32_t>& label,
                       const std::function<void(const std::vector<std::uint32_t>&)>& visit)
      : algebra_(algebra), label_(label), visit_(visit) {
    const GaloisField& field = algebra.plane().field();
    const int n = 2 * field.e();
    for (int k = 0; k < n; ++k) {
      std::vector<int> unit(static_cast<std::size_t>(n), 0);
      unit[static_cast<std::size_t>(k)] = 1;
      basis_.push_back(algebra.plane().from_coordinates(unit));
    }
    in_image_.assign(algebra.size(), 0);
  }

  void run() {
    in_image_[0] = 1;
    step({{0, 0}});
  }

 private:
  void step(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& span) {
    const std::size_t j = images_.size();
    if (j == basis_.size()) {
      visit_(images_);
      return;
    }
    const int p = algebra_.plane().field().p();
    const std::uint32_t source = basis_[j];
    for (std::uint32_t w = 0; w < algebra_.size(); ++w) {
      if (in_image_[w] || label_[w] != label_[source]) continue;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> grown(span);
      bool ok = true;
      std::size_t layer_begin = 0;
      for (int c = 1; c < p && ok; ++c) {
        const std::size_t layer_end = grown.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
          const std::uint32_t s = algebra_.add(grown[i].first, source);
          const std::uint32_t t = algebra_.add(grown[i].second, w);
          if (label_[s] != label_[t]) {
            ok = false;
            break;
          }
          grown.emplace_back(s, t);
        }
        layer_begin = layer_end;
      }
      if (!ok) continue;
      for (std::size_t i = span.size(); i < grown.size(); ++i) in_image_[grown[i].second] = 1;
      images_.push_back(w);
      step(grown);
      images_.pop_back();
      for (std::size_t i = span.size(); i < grown.size(); ++i) in_image_[grown[i].second] = 0;
    }
  }

  const GroupAlgebra& algebra_;
  const std::vector<std::uint32_t>& label_;
  const std::function<void(const std::vector<std::uint32_t>&)>& visit_;
  std::vector<std::uint32_t> basis_;
  std::vector<std::uint32_t> images_;
  std::vector<char> in_image_;
};

}  // namespace

std::vector<LinearMap2e> maps_fixing_reference_lines(const GaloisField& field) {
  const GroupAlgebra algebra(field);
  const Plane& plane = algebra.plane();
  std::vector<std::uint32_t> label(plane.size(), 4);
  label[0] = 0;
  const std::array<Slope, 3> reference{Slope::finite(field.zero()), Slope::finite(field.one()), Slope::infinity()};
  for (std::uint32_t r = 0; r < reference.size(); ++r) {
    for (Point pt : punctured_line(field, reference[r])) label[plane.index(pt)] = r + 1;
  }
  std::vector<LinearMap2e> maps;
  const std::function<void(const std::vector<std::uint32_t>&)> visit = [&](const std::vector<std::uint32_t>& images) {
    maps.push_back(LinearMap2e::from_basis_images(field, images));
  };
  PreservingEnumerator(algebra, label, visit).run();
  return maps;
}

BigInt gl_order(int n, int p) {
  BigInt pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  BigInt order = 1, pi = 1;
  for (int i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

PreservingMaps partition_preserving_maps(const LinePartition& pi, std::uint64_t gl_cap) {
  const GaloisField& field = pi.field();
  const BigInt order = gl_order(2 * field.e(), field.p());
  if (order > gl_cap) {
    throw SizingError("partition_preserving_maps: |GL(" + std::to_string(2 * field.e()) + "," +
                      std::to_string(field.p()) + ")| = " + order.str() + " exceeds GL cap " +
                      std::to_string(gl_cap));
  }
  const GroupAlgebra algebra(field);
  const SchurBasis basis = build_schur_basis(pi);
  std::vector<std::uint32_t> label(algebra.size());
  for (std::uint32_t g = 0; g < algebra.size(); ++g) label[g] = static_cast<std::uint32_t>(basis.class_of(g));

  PreservingMaps result{{}, PermutationGroup(algebra.size())};
  std::vector<Permutation> generators;
  const std::function<void(const std::vector<std::uint32_t>&)> visit = [&](const std::vector<std::uint32_t>& images) {
    LinearMap2e sigma = LinearMap2e::from_basis_images(field, images);
    Permutation perm = sigma.permutation();
    if (!result.group.contains(perm)) {
      generators.push_back(std::move(perm));
      result.group = PermutationGroup(algebra.size(), generators);
    }
    result.maps.push_back(std::move(sigma));
  };
  PreservingEnumerator(algebra, label, visit).run();
  return result;
}

// ---------------------------------------------------------------------------
// Census

std::size_t CensusTable::count(CriterionVerdict c) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const CensusRow& r) { return r.criterion_verdict == c; }));
}

std::size_t CensusTable::count(CriterionVerdict c, OracleVerdict o) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const CensusRow& r) {
    return r.has_oracle && r.criterion_verdict == c && r.report.oracle_verdict == o;
  }));
}

std::size_t CensusTable::inconsistent() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) { return r.has_oracle && !r.report.consistent; }));
}

namespace {

std::vector<CensusRow> census_rows(const GaloisField& field, Scope scope, std::size_t census_cap) {
  std::vector<CensusRow> rows;
  std::size_t index = 0;
  enumerate_partitions(
      field, {},
      [&](const LinePartition& pi) {
        const bool condition = condition_holds(pi);
        if (scope == Scope::all || condition) {
          rows.push_back(CensusRow{index, pi, singleton_slopes(pi), condition,
                                   condition ? CriterionVerdict::predicts_nonschurian : CriterionVerdict::no_prediction,
                                   false, SchurianReport{pi, 0, {}, {}, {}}});
        }
        ++index;
      },
      census_cap);
  return rows;
}

void run_parallel(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (!stop) {
        const std::size_t i = next++;
        if (i >= count) return;
        try {
          task(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

CensusTable census(const GaloisField& field, Scope scope, const CensusOptions& options) {
  return {field.spec(), false, census_rows(field, scope, options.census_cap)};
}

CensusTable cross_validate_table(const GaloisField& field, Scope scope, const CensusOptions& options) {
  CensusTable table{field.spec(), true, census_rows(field, scope, options.census_cap)};
  const OracleOptions oracle{options.oracle_cap};
  run_parallel(table.rows.size(), options.workers, [&](std::size_t i) {
    CensusRow& row = table.rows[i];
    row.report = is_schurian(row.partition, oracle);
    row.has_oracle = true;
  });
  return table;
}

CensusTable cross_validate(const GaloisField& field, Scope scope, const CensusOptions& options) {
  CensusTable table = cross_validate_table(field, scope, options);
  for (const auto& row : table.rows) {
    if (!row.report.consistent) {
      throw VerificationFailure("cross_validate: partition " + row.partition.literal() + " over GF(" +
                                field.spec().literal() + ") is predicted non-schurian but the oracle found it schurian");
    }
  }
  return table;
}

}  // namespace schurring
