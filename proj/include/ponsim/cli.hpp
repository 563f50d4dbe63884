#pragma once

#include <string>
#include <vector>

namespace ponsim {

/// Full command-line front end, callable in-process (tests drive it without
/// spawning). `args` excludes the program name. Returns the process exit
/// code: 0 success, 2 configuration error, 3 runtime failure.
int cli_main(const std::vector<std::string>& args);

}  // namespace ponsim
