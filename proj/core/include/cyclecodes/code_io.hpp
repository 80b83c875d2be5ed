#pragma once

#include <iosfwd>
#include <string>

#include "cyclecodes/codes.hpp"

namespace cyclecodes::codes {

// Line 1 "q n", then one word per line as space-separated integers, LF
// endings. Readers reject symbols outside [0, q) and report the line number.

void write_code(std::ostream& os, const Code& code);
Code read_code(std::istream& is);

void write_code_file(const std::string& path, const Code& code);
Code read_code_file(const std::string& path);

}  // namespace cyclecodes::codes
