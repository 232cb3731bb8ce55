#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wva::cli {

std::string_view tool_version() noexcept;

/// Runs `wva-sense` with `args` (program name excluded) and returns the
/// process exit code: 0 ok, 2 configuration/usage, 3 numerical (singular
/// post-selection, no signal), 4 detection-limited, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wva::cli
