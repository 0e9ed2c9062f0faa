#pragma once

#include <string>
#include <string_view>

namespace ph0 {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double value);

// Strict full-token parse; accepts inf/nan spellings like std::from_chars.
bool parse_double(std::string_view token, double& out);

bool parse_uint64(std::string_view token, unsigned long long& out);

} // namespace ph0
