#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schurring/cli.hpp"
#include "schurring/errors.hpp"

namespace py = pybind11;
using namespace schurring;

namespace {

// Slopes cross the boundary as int (finite element index) or the string "inf".
py::object slope_to_py(Slope s) {
  if (s.is_infinite()) return py::str("inf");
  return py::int_(s.value().index);
}

Slope slope_from_py(const GaloisField& field, const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_slope_literal(field, h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) {
    const auto v = h.cast<long long>();
    if (v < 0) throw ParseError("negative slope " + std::to_string(v));
    return parse_slope_literal(field, std::to_string(v));
  }
  throw ParseError("slopes are ints or \"inf\"");
}

py::list slopes_to_py(const std::vector<Slope>& slopes) {
  py::list out;
  for (Slope s : slopes) out.append(slope_to_py(s));
  return out;
}

py::list classes_to_py(const LinePartition& pi) {
  py::list out;
  for (const auto& cls : pi.classes()) out.append(slopes_to_py(cls));
  return out;
}

LinePartition partition_from_py(const GaloisField& field, const py::iterable& classes) {
  std::vector<std::vector<Slope>> out;
  for (const auto& cls : classes) {
    auto& dst = out.emplace_back();
    for (const auto& s : cls.cast<py::iterable>()) dst.push_back(slope_from_py(field, s));
  }
  return {field, std::move(out)};
}

py::list matrix_to_py(const FpMatrix& m) {
  py::list rows;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j) row.append(m.at(i, j));
    rows.append(row);
  }
  return rows;
}

py::dict report_to_py(const SchurianReport& r) {
  py::dict d;
  d["partition"] = classes_to_py(r.partition);
  d["scheme_rank"] = r.scheme_rank;
  d["aut_order"] = py::int_(py::str(r.aut_order));
  d["stabilizer_orbit_sizes"] = r.stabilizer_orbit_sizes;
  d["class_sizes"] = r.class_sizes;
  d["oracle_verdict"] = to_string(r.oracle_verdict);
  d["criterion_verdict"] = to_string(r.criterion_verdict);
  d["consistent"] = r.consistent;
  return d;
}

py::dict table_to_py(const CensusTable& table) {
  py::list rows;
  for (const auto& row : table.rows) {
    py::dict d;
    d["index"] = row.index;
    d["partition"] = classes_to_py(row.partition);
    d["singletons"] = slopes_to_py(row.singletons);
    d["condition"] = row.condition;
    d["criterion_verdict"] = to_string(row.criterion_verdict);
    if (row.has_oracle) d["report"] = report_to_py(row.report);
    rows.append(d);
  }
  py::dict out;
  out["field"] = table.field.literal();
  out["rows"] = rows;
  out["predicted_nonschurian"] = table.count(CriterionVerdict::predicts_nonschurian);
  if (table.with_oracle) out["inconsistent"] = table.inconsistent();
  return out;
}

Scope parse_scope(const std::string& s) {
  if (s == "all") return Scope::all;
  if (s == "filtered") return Scope::filtered;
  throw ParseError("scope must be 'all' or 'filtered'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schur rings from partitions of the lines of a finite plane";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizingError>(m, "SizingError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

  py::class_<GaloisField>(m, "Field")
      .def(py::init([](int p, int e) { return GaloisField::make(p, e); }), py::arg("p"), py::arg("e") = 1)
      .def_static("parse", [](const std::string& s) { return parse_field_literal(s); })
      .def_property_readonly("p", &GaloisField::p)
      .def_property_readonly("e", &GaloisField::e)
      .def_property_readonly("q", &GaloisField::q)
      .def_property_readonly("modulus", [](const GaloisField& f) { return f.spec().modulus; })
      .def_property_readonly("zeta", [](const GaloisField& f) { return f.zeta().index; })
      .def("add", [](const GaloisField& f, std::uint64_t a, std::uint64_t b) {
        return f.add(f.element(a), f.element(b)).index;
      })
      .def("sub", [](const GaloisField& f, std::uint64_t a, std::uint64_t b) {
        return f.sub(f.element(a), f.element(b)).index;
      })
      .def("mul", [](const GaloisField& f, std::uint64_t a, std::uint64_t b) {
        return f.mul(f.element(a), f.element(b)).index;
      })
      .def("inv", [](const GaloisField& f, std::uint64_t a) { return f.inv(f.element(a)).index; })
      .def("pow", [](const GaloisField& f, std::uint64_t a, std::uint64_t k) { return f.pow(f.element(a), k).index; })
      .def("regular_representation",
           [](const GaloisField& f, std::uint64_t a) { return matrix_to_py(f.regular_representation(f.element(a))); })
      .def("subfields",
           [](const GaloisField& f) {
             std::vector<std::vector<std::uint32_t>> out;
             for (const auto& sub : f.subfields()) {
               auto& dst = out.emplace_back();
               for (auto x : sub) dst.push_back(x.index);
             }
             return out;
           })
      .def("__eq__", [](const GaloisField& a, const GaloisField& b) { return a == b; })
      .def("__str__", [](const GaloisField& f) { return f.spec().literal(); })
      .def("__repr__", [](const GaloisField& f) { return "Field('" + f.spec().literal() + "')"; });

  py::class_<LinePartition>(m, "Partition")
      .def(py::init(&partition_from_py), py::arg("field"), py::arg("classes"))
      .def_static("singletons", &LinePartition::singletons)
      .def_static("one_class", &LinePartition::one_class)
      .def_static("from_json", [](const std::string& s) { return parse_partition_json(s); })
      .def_static("load", [](const std::string& path) { return read_partition_file(path); })
      .def("to_json", &partition_to_json)
      .def_property_readonly("field", &LinePartition::field)
      .def_property_readonly("classes", &classes_to_py)
      .def_property_readonly("rank", &LinePartition::rank)
      .def("singleton_slopes", [](const LinePartition& pi) { return slopes_to_py(singleton_slopes(pi)); })
      .def("condition_holds", &condition_holds)
      .def("induced_partition", &induced_partition)
      .def("mobius_normalize",
           [](const LinePartition& pi) -> py::object {
             const auto n = mobius_normalize(pi);
             if (!n) return py::none();
             py::dict d;
             d["partition"] = n->partition;
             d["pivots"] = slopes_to_py({n->pivots.begin(), n->pivots.end()});
             d["map"] = py::make_tuple(n->map.a.index, n->map.b.index, n->map.c.index, n->map.d.index);
             return d;
           })
      .def("__eq__", [](const LinePartition& a, const LinePartition& b) { return a == b; })
      .def("__str__", &LinePartition::literal)
      .def("__repr__", [](const LinePartition& pi) { return "Partition('" + pi.literal() + "')"; });

  m.def("bell_number", &bell_number);

  m.def(
      "partitions",
      [](const GaloisField& f, std::size_t census_cap) { return all_partitions(f, {}, census_cap); },
      py::arg("field"), py::arg("census_cap") = kDefaultCensusCap);

  m.def("verify_schur_ring", [](const LinePartition& pi) {
    const AxiomReport axioms = verify_schur_axioms(build_schur_basis(pi));
    const LineIdentityReport lines = verify_line_identities(pi);
    py::dict d;
    d["identity_class"] = axioms.identity_class;
    d["inverse_closed"] = axioms.inverse_closed;
    d["product_closed"] = axioms.product_closed;
    d["line_identities"] = lines.passed();
    d["failures"] = lines.failures;
    d["passed"] = axioms.passed() && lines.passed();
    return d;
  });

  m.def("structure_constants", [](const LinePartition& pi) {
    const StructureConstants c = structure_constants(build_schur_basis(pi));
    const std::size_t r = c.rank();
    std::vector<std::vector<std::vector<std::int64_t>>> out(r, std::vector<std::vector<std::int64_t>>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out[i][j].push_back(c.at(i, j, k));
    return out;
  });

  m.def(
      "schurian_test",
      [](const LinePartition& pi, std::uint32_t oracle_cap) {
        std::optional<SchurianReport> r;
        {
          py::gil_scoped_release release;
          r = is_schurian(pi, {oracle_cap});
        }
        return report_to_py(*r);
      },
      py::arg("partition"), py::arg("oracle_cap") = kDefaultOracleCap);

  m.def("criterion", [](const LinePartition& pi) { return to_string(criterion(pi)); });

  m.def(
      "census",
      [](const GaloisField& f, const std::string& scope, std::size_t census_cap) {
        return table_to_py(census(f, parse_scope(scope), {kDefaultOracleCap, census_cap, 1}));
      },
      py::arg("field"), py::arg("scope") = "all", py::arg("census_cap") = kDefaultCensusCap);

  m.def(
      "cross_validate",
      [](const GaloisField& f, const std::string& scope, std::uint32_t oracle_cap, std::size_t census_cap,
         unsigned workers) {
        CensusTable table;
        {
          py::gil_scoped_release release;
          table = cross_validate_table(f, parse_scope(scope), {oracle_cap, census_cap, workers});
        }
        return table_to_py(table);
      },
      py::arg("field"), py::arg("scope") = "all", py::arg("oracle_cap") = kDefaultOracleCap,
      py::arg("census_cap") = kDefaultCensusCap, py::arg("workers") = 0);

  m.def("fixing_map_checks", [](const GaloisField& f) {
    py::list out;
    for (const auto& sigma : maps_fixing_reference_lines(f)) {
      const FixingMapReport r = verify_fixing_map(f, sigma);
      py::dict d;
      d["matrix"] = matrix_to_py(sigma.matrix());
      d["invariant_slopes"] = slopes_to_py(r.invariant);
      d["passed"] = r.passed();
      out.append(d);
    }
    return out;
  });

  m.def(
      "preserving_group_order",
      [](const LinePartition& pi, std::uint64_t gl_cap) {
        return py::int_(py::str(partition_preserving_maps(pi, gl_cap).group.order_string()));
      },
      py::arg("partition"), py::arg("gl_cap") = kDefaultGlCap);

  m.def(
      "run",
      [](const std::string& command, std::optional<std::string> field, std::optional<std::string> partition,
         std::optional<std::string> format, unsigned workers) {
        RunConfig config;
        config.command = command;
        config.field = std::move(field);
        config.partition_path = std::move(partition);
        if (format) config.format = parse_format(*format);
        config.workers = workers;
        std::ostringstream out, err;
        const int status = run(config, out, err);
        return py::make_tuple(status, py::bytes(out.str()), err.str());
      },
      py::arg("command"), py::arg("field") = py::none(), py::arg("partition") = py::none(),
      py::arg("format") = py::none(), py::arg("workers") = 0);
}
