#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace netwalk {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitData = 3, kExitInternal = 4 };

// Entry point of the `netwalk` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "10..100:10", "0,20,50", "1..10" -> expanded ascending list.
std::vector<std::size_t> parse_int_list(const std::string& text);

}  // namespace netwalk
