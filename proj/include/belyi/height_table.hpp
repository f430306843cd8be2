#pragma once

// Persistent height table: one JSON object per line, appended under an
// exclusive advisory lock on the whole file.

#include <filesystem>
#include <string>
#include <vector>

#include "belyi/height.hpp"
#include "belyi/json_io.hpp"

namespace belyi {

struct HeightRecord {
    Rational lambda;
    Integer lower;
    std::size_t upper;
    bool exact;
    Poly witness;
    std::string timestamp;  // ISO-8601, UTC
    friend bool operator==(const HeightRecord&, const HeightRecord&) = default;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

HeightRecord make_record(const HeightBounds& bounds, std::string timestamp = utc_timestamp());

json::Json to_json(const HeightRecord& record);
/// Parses and re-validates: the witness must certify, evaluate into {0,1} at lambda,
/// have degree `upper`, and lower <= upper. Throws json::FormatError otherwise.
HeightRecord record_from_json(const json::Json& j);

/// Appends one line. Throws std::runtime_error on I/O failure.
void append_record(const std::filesystem::path& path, const HeightRecord& record);

/// Every record in file order; a missing file is an empty table.
/// Throws json::FormatError naming the first bad line.
std::vector<HeightRecord> load_table(const std::filesystem::path& path);

/// One record per lambda: the lowest upper bound, preferring exact records, then the earliest.
/// Output is ordered by first appearance of each lambda.
std::vector<HeightRecord> compact(const std::vector<HeightRecord>& records);

/// Rewrites the file with compact(load_table(path)) under the lock.
void compact_table(const std::filesystem::path& path);

}  // namespace belyi
