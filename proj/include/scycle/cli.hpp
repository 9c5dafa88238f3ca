#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scycle::cli {

// args excludes the program name; returns the process exit code
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scycle::cli
