#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqpieri::cli {

// Dispatches one invocation. Exit status: 0 on success or a passing
// verification, 1 when a verification reports mismatches, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gqpieri::cli
