#pragma once

#include <string>
#include <vector>

namespace hgr {

// Runs one command. args excludes the program name. Exit codes: 0 success or
// verified yes, 1 verified no, 2 resource-limited unknown, 64 usage or input
// error.
int run_cli(const std::vector<std::string>& args);

}  // namespace hgr
