#ifndef SURFACE_ISING_REPORT_HPP
#define SURFACE_ISING_REPORT_HPP

#include <string>

#include <json.hpp>

#include "surface_ising/partition.hpp"

namespace surface_ising {

using Json = nlohmann::ordered_json;

/// Record {"schema": 1, "method", "mode", "z", "numeric", ...}. NaN becomes null.
Json to_json(const PartitionResult& r, bool with_pfaffians = true);
std::string render_text(const PartitionResult& r);

/// Pfaffian table, one row per flip vector (practical) or enhancement (general).
Json pfaffian_table_json(const PartitionResult& r);
std::string pfaffian_table_tsv(const PartitionResult& r);

/// Shortest round-trip decimal for a double.
std::string format_double(double v);

}  // namespace surface_ising

#endif  // SURFACE_ISING_REPORT_HPP
