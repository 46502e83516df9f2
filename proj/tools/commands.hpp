#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parcat::cli {

// Exit status: 0 success, 1 mismatch or failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parcat::cli
