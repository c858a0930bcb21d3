#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace laura {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool ends_with_ci(std::string_view s, std::string_view suffix);

// Splits on '\n'; a trailing newline does not produce an empty final element.
// "\r\n" endings are preserved in the returned pieces.
std::vector<std::string> split_lines(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Maximal runs of non-whitespace.
std::size_t word_count(std::string_view s);

bool all_ascii(std::string_view s);

std::uint64_t fnv1a64(std::string_view data);
std::string to_hex(std::uint64_t v);

// One-line structured event on stderr: {"event":"...","k":"v",...}
void log_event(std::string_view event, std::initializer_list<std::pair<std::string_view, std::string_view>> fields = {});

} // namespace laura
