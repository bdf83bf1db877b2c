#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gprop {

// Command-line driver; exit code 0 on success, 1 on a property failure
// (failed check, unequal terms), 2 on usage or parse errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gprop
