#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace laura {

// Seconds since the Unix epoch, always UTC. Timestamps are normalized to
// seconds precision at ingest so record ordering is total.
using UtcSeconds = std::int64_t;

// Parses RFC 3339 timestamps ("2024-12-26T09:30:00Z", offsets and fractional
// seconds accepted; fractions are truncated, offsets normalized to UTC).
std::optional<UtcSeconds> parse_rfc3339(std::string_view text);

// Parses a bare "YYYY-MM-DD" date as midnight UTC.
std::optional<UtcSeconds> parse_utc_date(std::string_view text);

// Renders as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(UtcSeconds t);

} // namespace laura
