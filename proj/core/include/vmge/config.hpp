#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace vmge {

// Flat `key = value` configuration text; '#' starts a comment, blank lines
// are ignored.  Later occurrences of a key override earlier ones.
// Throws std::runtime_error with the 1-based line number on malformed lines.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace vmge
