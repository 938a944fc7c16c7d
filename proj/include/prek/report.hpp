#pragma once

#include "prek/census.hpp"
#include "prek/collision.hpp"
#include "prek/families.hpp"
#include "prek/prek_map.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace prek {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Preimage lists in rendered reports are cut to this many entries; the
/// full count is always kept in `preimage_count`.
inline constexpr std::size_t witness_cap = 16;

/// Table output shows at most this many parts of a partition.
inline constexpr std::size_t table_part_limit = 12;

enum class OutputFormat { table, json, csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Parts are JSON numbers when they fit in 64 bits, decimal strings otherwise.
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const InjectivityReport& report, std::optional<std::size_t> cap = witness_cap);
/// Throws std::invalid_argument if the document is not a well-formed report.
InjectivityReport injectivity_report_from_json(const json& j);

json to_json(const PrekResult& result, const Partition& source);
json to_json(const CounterexamplePair& pair);
json to_json(const CensusRecord& record);

/// Human-readable partition, truncated after table_part_limit parts.
std::string table_partition(const Partition& p);
/// Space-separated parts, never truncated (CSV-safe).
std::string csv_partition(const Partition& p);

/// A command result in all three output formats.
struct Rendered {
    json document;
    std::string table;
    std::string csv;

    std::string text(OutputFormat format) const;
};

Rendered render_map(const Partition& source, const PrekResult& result);
Rendered render_collisions(const std::vector<InjectivityReport>& reports, bool single);
Rendered render_family(const std::vector<CounterexamplePair>& pairs);
Rendered render_census(const CensusSweep& sweep);

} // namespace prek
