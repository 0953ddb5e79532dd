#pragma once

// Text format for one code per file:
//
//   field p e [c0 ... ce]
//   code N k
//   <k lines of N encoded field elements>
//
// write_code emits single spaces and a trailing newline; reading then
// writing a file in that form reproduces it byte for byte.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "masseyx/code.hpp"
#include "masseyx/gf.hpp"

namespace masseyx {

Field parse_field_header(std::string_view line);
std::string field_header(const FieldSpec& f);

LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);

LinearCode load_code_file(const std::filesystem::path& path);
void save_code_file(const std::filesystem::path& path, const LinearCode& c);

std::string to_string(const LinearCode& c);
LinearCode code_from_string(std::string_view text);

}  // namespace masseyx
