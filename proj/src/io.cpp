#include "schurring/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "schurring/errors.hpp"

namespace schurring {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "tsv") return Format::tsv;
  throw ParseError("unknown format '" + std::string(text) + "' (expected json or tsv)");
}

namespace {

std::uint64_t parse_decimal(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

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

template <class T>
std::string join(const std::vector<T>& values, const auto& render) {
  if (values.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += render(values[i]);
  }
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  return join(sizes, [](std::size_t s) { return std::to_string(s); });
}

std::string join_slopes(const std::vector<Slope>& slopes) {
  return join(slopes, [](Slope s) { return s.literal(); });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void add_field(json& j, const FieldSpec& spec) {
  j["field"] = spec.literal();
  j["modulus"] = spec.modulus;
  j["zeta_index"] = spec.zeta_index;
}

}  // namespace

GaloisField parse_field_literal(std::string_view text, std::uint64_t element_cap) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) throw ParseError("field literal '" + std::string(text) + "' is not of the form p^e");
  const auto p = parse_decimal(text.substr(0, caret), "field characteristic");
  const auto e = parse_decimal(text.substr(caret + 1), "field degree");
  if (p > 1'000'000 || e > 64) throw SizingError("field literal '" + std::string(text) + "' is out of range");
  try {
    return GaloisField::make(static_cast<int>(p), static_cast<int>(e), element_cap);
  } catch (const PreconditionError& err) {
    throw ParseError(std::string("field literal '") + std::string(text) + "': " + err.what());
  }
}

Slope parse_slope_literal(const GaloisField& field, std::string_view text) {
  if (text == "inf") return Slope::infinity();
  const auto index = parse_decimal(text, "slope literal");
  if (index >= field.q()) {
    throw ParseError("slope literal '" + std::string(text) + "' outside GF(" + field.spec().literal() + ")");
  }
  return Slope::finite({static_cast<std::uint32_t>(index)});
}

LinePartition parse_partition_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("partition file: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError("partition file: top level must be an object");
  if (!doc.contains("field") || !doc["field"].is_string()) throw ParseError("partition file: missing string field 'field'");
  if (!doc.contains("classes") || !doc["classes"].is_array()) {
    throw ParseError("partition file: missing array field 'classes'");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "field" && key != "classes") throw ParseError("partition file: unknown key '" + key + "'");
  }
  const GaloisField field = parse_field_literal(doc["field"].get<std::string>());

  std::vector<std::vector<Slope>> classes;
  std::vector<char> seen(field.q() + 1, 0);
  const auto& raw = doc["classes"];
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const std::string where = "classes[" + std::to_string(c) + "]";
    if (!raw[c].is_array()) throw ParseError("partition file: " + where + " is not an array");
    if (raw[c].empty()) throw ParseError("partition file: " + where + " is empty");
    auto& cls = classes.emplace_back();
    for (std::size_t i = 0; i < raw[c].size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      const auto& entry = raw[c][i];
      Slope s = Slope::infinity();
      try {
        if (entry.is_string()) {
          s = parse_slope_literal(field, entry.get<std::string>());
        } else if (entry.is_number_unsigned()) {
          s = parse_slope_literal(field, std::to_string(entry.get<std::uint64_t>()));
        } else {
          throw ParseError("expected a slope literal");
        }
      } catch (const ParseError& err) {
        throw ParseError("partition file: " + at + ": " + err.what());
      }
      auto& flag = seen[s.dense(field.q())];
      if (flag) throw ParseError("partition file: " + at + ": duplicate slope " + s.literal());
      flag = 1;
      cls.push_back(s);
    }
  }
  for (std::uint32_t d = 0; d <= field.q(); ++d) {
    if (!seen[d]) throw ParseError("partition file: slope " + Slope::from_dense(d, field.q()).literal() + " is missing");
  }
  return {field, std::move(classes)};
}

LinePartition read_partition_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open partition file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_partition_json(buffer.str());
  } catch (const ParseError& err) {
    throw ParseError(path.string() + ": " + err.what());
  }
}

std::string partition_to_json(const LinePartition& pi) {
  json j;
  j["field"] = pi.field().spec().literal();
  j["classes"] = classes_json(pi);
  return dump(j);
}

std::string emit_schurian_report(const SchurianReport& report, Format format) {
  if (format == Format::tsv) {
    std::ostringstream out;
    out << "field\tpartition\tscheme_rank\taut_order\tclass_sizes\tstabilizer_orbit_sizes\toracle_verdict\t"
           "criterion_verdict\tconsistent\n";
    out << report.partition.field().spec().literal() << '\t' << report.partition.literal() << '\t'
        << report.scheme_rank << '\t' << report.aut_order << '\t' << join_sizes(report.class_sizes) << '\t'
        << join_sizes(report.stabilizer_orbit_sizes) << '\t' << to_string(report.oracle_verdict) << '\t'
        << to_string(report.criterion_verdict) << '\t' << (report.consistent ? "true" : "false") << '\n';
    return out.str();
  }
  json j;
  add_field(j, report.partition.field().spec());
  j["partition"] = classes_json(report.partition);
  j["scheme_rank"] = report.scheme_rank;
  j["aut_order"] = report.aut_order;
  j["class_sizes"] = report.class_sizes;
  j["stabilizer_orbit_sizes"] = report.stabilizer_orbit_sizes;
  j["oracle_verdict"] = to_string(report.oracle_verdict);
  j["criterion_verdict"] = to_string(report.criterion_verdict);
  j["consistent"] = report.consistent;
  return dump(j);
}

std::string emit_census(const CensusTable& table, Format format) {
  if (format == Format::tsv) {
    std::ostringstream out;
    out << "index\tpartition\tsingletons\tcondition\tcriterion";
    if (table.with_oracle) out << "\toracle\tscheme_rank\taut_order\tclass_sizes\tstabilizer_orbit_sizes\tconsistent";
    out << '\n';
    for (const auto& row : table.rows) {
      out << row.index << '\t' << row.partition.literal() << '\t' << join_slopes(row.singletons) << '\t'
          << (row.condition ? "true" : "false") << '\t' << to_string(row.criterion_verdict);
      if (table.with_oracle) {
        const auto& r = row.report;
        out << '\t' << to_string(r.oracle_verdict) << '\t' << r.scheme_rank << '\t' << r.aut_order << '\t'
            << join_sizes(r.class_sizes) << '\t' << join_sizes(r.stabilizer_orbit_sizes) << '\t'
            << (r.consistent ? "true" : "false");
      }
      out << '\n';
    }
    return out.str();
  }
  json j;
  add_field(j, table.field);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    r["index"] = row.index;
    r["partition"] = classes_json(row.partition);
    r["singletons"] = slope_list(row.singletons);
    r["condition"] = row.condition;
    r["criterion_verdict"] = to_string(row.criterion_verdict);
    if (table.with_oracle) {
      r["oracle_verdict"] = to_string(row.report.oracle_verdict);
      r["scheme_rank"] = row.report.scheme_rank;
      r["aut_order"] = row.report.aut_order;
      r["class_sizes"] = row.report.class_sizes;
      r["stabilizer_orbit_sizes"] = row.report.stabilizer_orbit_sizes;
      r["consistent"] = row.report.consistent;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  json summary;
  summary["partitions"] = table.rows.size();
  summary["predicted_nonschurian"] = table.count(CriterionVerdict::predicts_nonschurian);
  if (table.with_oracle) {
    for (auto c : {CriterionVerdict::predicts_nonschurian, CriterionVerdict::no_prediction}) {
      for (auto o : {OracleVerdict::schurian, OracleVerdict::non_schurian}) {
        summary[to_string(c) + "/" + to_string(o)] = table.count(c, o);
      }
    }
    summary["inconsistent"] = table.inconsistent();
  }
  j["summary"] = std::move(summary);
  return dump(j);
}

std::string emit_structure_constants(const StructureConstants& constants, Format format) {
  const std::size_t r = constants.rank();
  if (format == Format::tsv) {
    std::ostringstream out;
    out << "i\tj\tk\tc\n";
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out << i << '\t' << j << '\t' << k << '\t' << constants.at(i, j, k) << '\n';
    return out.str();
  }
  json tensor = json::array();
  for (std::size_t i = 0; i < r; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < r; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < r; ++k) row.push_back(constants.at(i, j, k));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  json j;
  j["rank"] = r;
  j["tensor"] = std::move(tensor);
  return dump(j);
}

}  // namespace schurring
