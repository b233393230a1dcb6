#include "schurring/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "schurring/errors.hpp"

namespace schurring {

using nlohmann::json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-schur-ring", "check-condition", "structure-constants",
                                              "schurian-test",     "invariant-slopes", "cross-validate",
                                              "census"};
  return names;
}

namespace {

struct Emitted {
  std::string bytes;
  int status = kExitOk;
};

json slope_list(const std::vector<Slope>& slopes) {
  json out = json::array();
  for (Slope s : slopes) out.push_back(s.literal());
  return out;
}

json classes_json(const LinePartition& pi) {
  json out = json::array();
  for (const auto& cls : pi.classes()) out.push_back(slope_list(cls));
  return out;
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string join_slopes(const std::vector<Slope>& slopes) {
  if (slopes.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) out += (i ? "," : "") + slopes[i].literal();
  return out;
}

class Dispatcher {
 public:
  explicit Dispatcher(const RunConfig& config) : config_(config) {}

  Emitted dispatch() {
    const std::string& c = config_.command;
    if (c == "verify-schur-ring") return verify_schur_ring();
    if (c == "check-condition") return check_condition();
    if (c == "structure-constants") return structure_constants_cmd();
    if (c == "schurian-test") return schurian_test();
    if (c == "invariant-slopes") return invariant_slopes_cmd();
    if (c == "cross-validate") return cross_validate_cmd();
    if (c == "census") return census_cmd();
    throw ParseError("unknown command '" + c + "'");
  }

 private:
  Format format(Format fallback) const { return config_.format.value_or(fallback); }

  GaloisField field_only() const {
    if (!config_.field) throw ParseError(config_.command + ": --field is required");
    return parse_field_literal(*config_.field);
  }

  std::optional<LinePartition> maybe_partition() const {
    if (!config_.partition_path) return std::nullopt;
    LinePartition pi = read_partition_file(*config_.partition_path);
    if (config_.field && parse_field_literal(*config_.field).spec() != pi.field().spec()) {
      throw ParseError("--field " + *config_.field + " disagrees with partition file field " +
                       pi.field().spec().literal());
    }
    return pi;
  }

  LinePartition partition() const {
    auto pi = maybe_partition();
    if (!pi) throw ParseError(config_.command + ": --partition is required");
    return *pi;
  }

  CensusOptions census_options() const {
    return {config_.oracle_cap, config_.census_cap, config_.workers};
  }

  static void add_field(json& j, const FieldSpec& spec) {
    j["field"] = spec.literal();
    j["modulus"] = spec.modulus;
    j["zeta_index"] = spec.zeta_index;
  }

  Emitted verify_schur_ring() const {
    if (auto pi = maybe_partition()) {
      const AxiomReport axioms = verify_schur_axioms(build_schur_basis(*pi));
      const LineIdentityReport formulas = verify_line_identities(*pi);
      const bool passed = axioms.passed() && formulas.passed();
      if (format(Format::json) == Format::tsv) {
        std::ostringstream out;
        out << "partition\tidentity_class\tinverse_closed\tproduct_closed\tline_identities\tpassed\n"
            << pi->literal() << '\t' << flag(axioms.identity_class) << '\t' << flag(axioms.inverse_closed) << '\t'
            << flag(axioms.product_closed) << '\t' << flag(formulas.passed()) << '\t' << flag(passed) << '\n';
        return {out.str(), passed ? kExitOk : kExitVerificationFailed};
      }
      json j;
      add_field(j, pi->field().spec());
      j["partition"] = classes_json(*pi);
      j["axioms"] = {{"identity_class", axioms.identity_class},
                     {"inverse_closed", axioms.inverse_closed},
                     {"product_closed", axioms.product_closed},
                     {"detail", axioms.detail}};
      j["line_identities"] = {{"distinct_lines", formulas.distinct_lines}, {"line_squares", formulas.line_squares},
                              {"span_identity", formulas.span_identity}, {"mixed_products", formulas.mixed_products},
                              {"squares", formulas.squares},             {"failures", formulas.failures}};
      j["passed"] = passed;
      return {j.dump(2) + "\n", passed ? kExitOk : kExitVerificationFailed};
    }

    const GaloisField field = field_only();
    std::size_t total = 0;
    std::vector<std::string> failures;
    std::ostringstream tsv;
    tsv << "index\tpartition\taxioms\tline_identities\n";
    enumerate_partitions(
        field, {},
        [&](const LinePartition& pi) {
          const bool axioms = verify_schur_axioms(build_schur_basis(pi)).passed();
          const bool formulas = verify_line_identities(pi).passed();
          tsv << total << '\t' << pi.literal() << '\t' << flag(axioms) << '\t' << flag(formulas) << '\n';
          if (!axioms || !formulas) failures.push_back(pi.literal());
          ++total;
        },
        config_.census_cap);
    const int status = failures.empty() ? kExitOk : kExitVerificationFailed;
    if (format(Format::json) == Format::tsv) return {tsv.str(), status};
    json j;
    add_field(j, field.spec());
    j["partitions"] = total;
    j["passed"] = total - failures.size();
    j["failures"] = failures;
    return {j.dump(2) + "\n", status};
  }

  Emitted check_condition() const {
    const LinePartition pi = partition();
    const auto m = singleton_slopes(pi);
    const bool holds = condition_holds(pi);
    const auto normalized = mobius_normalize(pi);
    if (format(Format::json) == Format::tsv) {
      std::ostringstream out;
      out << "partition\tsingletons\tcondition\tcriterion\tnormalized\tnormalized_condition\n"
          << pi.literal() << '\t' << join_slopes(m) << '\t' << flag(holds) << '\t' << to_string(criterion(pi)) << '\t'
          << (normalized ? normalized->partition.literal() : "-") << '\t'
          << (normalized ? flag(condition_holds(normalized->partition)) : "-") << '\n';
      return {out.str()};
    }
    json j;
    add_field(j, pi.field().spec());
    j["partition"] = classes_json(pi);
    j["singleton_slopes"] = slope_list(m);
    j["condition_holds"] = holds;
    j["criterion_verdict"] = to_string(criterion(pi));
    if (normalized) {
      const PlaneMap& g = normalized->map;
      j["mobius_normalization"] = {
          {"pivots", slope_list({normalized->pivots.begin(), normalized->pivots.end()})},
          {"map", {g.a.index, g.b.index, g.c.index, g.d.index}},
          {"partition", classes_json(normalized->partition)},
          {"condition_holds", condition_holds(normalized->partition)}};
    } else {
      j["mobius_normalization"] = nullptr;
    }
    return {j.dump(2) + "\n"};
  }

  Emitted structure_constants_cmd() const {
    const LinePartition pi = partition();
    return {emit_structure_constants(structure_constants(build_schur_basis(pi)), format(Format::tsv))};
  }

  Emitted schurian_test() const {
    const LinePartition pi = partition();
    const SchurianReport report = is_schurian(pi, {config_.oracle_cap});
    return {emit_schurian_report(report, format(Format::json)), report.consistent ? kExitOk : kExitVerificationFailed};
  }

  Emitted invariant_slopes_cmd() const {
    if (auto pi = maybe_partition()) {
      const PreservingMaps maps = partition_preserving_maps(*pi, config_.gl_cap);
      if (format(Format::tsv) == Format::tsv) {
        std::ostringstream out;
        out << "index\tmatrix\tinvariant_slopes\n";
        for (std::size_t i = 0; i < maps.maps.size(); ++i) {
          out << i << '\t' << maps.maps[i].matrix().to_string() << '\t'
              << join_slopes(invariant_slopes(pi->field(), maps.maps[i])) << '\n';
        }
        return {out.str()};
      }
      json j;
      add_field(j, pi->field().spec());
      j["partition"] = classes_json(*pi);
      j["group_order"] = maps.group.order_string();
      json rows = json::array();
      for (const auto& sigma : maps.maps) {
        rows.push_back({{"matrix", sigma.matrix().to_string()},
                        {"invariant_slopes", slope_list(invariant_slopes(pi->field(), sigma))}});
      }
      j["maps"] = std::move(rows);
      return {j.dump(2) + "\n"};
    }

    const GaloisField field = field_only();
    const auto maps = maps_fixing_reference_lines(field);
    bool all_passed = true;
    std::ostringstream tsv;
    tsv << "index\tmatrix\tinvariant_slopes\tsubfield\tblocks_equal\tcommutes\n";
    json rows = json::array();
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const FixingMapReport r = verify_fixing_map(field, maps[i]);
      all_passed = all_passed && r.passed();
      tsv << i << '\t' << maps[i].matrix().to_string() << '\t' << join_slopes(r.invariant) << '\t' << flag(r.subfield)
          << '\t' << flag(r.blocks_equal) << '\t' << flag(r.commutes) << '\n';
      rows.push_back({{"matrix", maps[i].matrix().to_string()},
                      {"invariant_slopes", slope_list(r.invariant)},
                      {"subfield", r.subfield},
                      {"blocks_equal", r.blocks_equal},
                      {"commutes", r.commutes}});
    }
    const int status = all_passed ? kExitOk : kExitVerificationFailed;
    if (format(Format::tsv) == Format::tsv) return {tsv.str(), status};
    json j;
    add_field(j, field.spec());
    j["maps_checked"] = maps.size();
    j["all_passed"] = all_passed;
    j["maps"] = std::move(rows);
    return {j.dump(2) + "\n", status};
  }

  Emitted cross_validate_cmd() const {
    const GaloisField field = field_only();
    const CensusTable table = cross_validate_table(field, config_.scope, census_options());
    return {emit_census(table, format(Format::tsv)), table.inconsistent() == 0 ? kExitOk : kExitVerificationFailed};
  }

  Emitted census_cmd() const {
    const GaloisField field = field_only();
    return {emit_census(census(field, config_.scope, census_options()), format(Format::tsv))};
  }

  const RunConfig& config_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.oracle_cap == 0 || config.gl_cap == 0 || config.census_cap == 0) {
      throw ParseError("caps must be positive");
    }
    const Emitted emitted = Dispatcher(config).dispatch();
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw ParseError("cannot open output file " + *config.output);
      file << emitted.bytes;
    } else {
      out << emitted.bytes;
    }
    if (emitted.status == kExitVerificationFailed) err << config.command << ": verification failed\n";
    return emitted.status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizingError& e) {
    err << "sizing error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace schurring
