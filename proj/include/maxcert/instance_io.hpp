#pragma once

#include <string>
#include <string_view>

#include "maxcert/instance.hpp"

namespace maxcert {

// Instance document format (JSON):
//   "m"         integer >= 1
//   "elements"  optional list of m distinct name strings
//   "op"        m rows of m element indices; op[x][y] is the index of x o y
//   "p", "q"    rational strings "num/den" (or "num"); plain integers accepted
//   "functions" list of { "name": string, "values": [m rational strings] }
//
// parse_instance throws ParseError with the offending location in the message.
// serialize_instance emits the canonical document; parsing it back yields an
// instance equal to the original, with every rational reduced.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Convenience file wrappers; parse errors gain the file name as a prefix.
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

} // namespace maxcert
