#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exflat::cli {

// Dispatches one invocation. Returns 0 on success with a single JSON
// document on `out`; 2 on usage errors; 1 on domain errors (message on
// `err`). args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exflat::cli
