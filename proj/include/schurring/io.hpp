#pragma once

// Literals, partition files and canonical report serialization.
//
// Field literal: "p^e".  Slope literal: decimal element index or "inf".
// Partition file: {"field": "5^1", "classes": [["inf"], ["0"], ["1"], ["2", "3", "4"]]}
//
// JSON output has sorted keys and two-space indentation; TSV output has a
// header row and one row per record.  Both are byte-identical for equal inputs.

#include <filesystem>
#include <string>
#include <string_view>

#include "schurring/schurian.hpp"

namespace schurring {

enum class Format { json, tsv };

Format parse_format(std::string_view text);

/// Throws ParseError for malformed literals; SizingError above element_cap.
GaloisField parse_field_literal(std::string_view text, std::uint64_t element_cap = kDefaultElementCap);
Slope parse_slope_literal(const GaloisField& field, std::string_view text);

/// Rejects duplicates, missing slopes and unknown literals, naming the offending entry.
LinePartition parse_partition_json(std::string_view text);
LinePartition read_partition_file(const std::filesystem::path& path);
std::string partition_to_json(const LinePartition& pi);

std::string emit_schurian_report(const SchurianReport& report, Format format);
std::string emit_census(const CensusTable& table, Format format);
std::string emit_structure_constants(const StructureConstants& constants, Format format);

}  // namespace schurring
