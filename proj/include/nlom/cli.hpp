#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlom {

/// Drive the nlom tool. args is argv[1..] (no program name); diagnostics go
/// to err, results to out. Returns the process exit code: 0 on success, 1
/// when an input document is rejected, 2 on command-line misuse.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace nlom
