#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dragonbound {

/// Exit codes: 0 success, 2 parse/validation error, 3 invalid folding curve
/// or verification failure, 4 length cap exceeded.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dragonbound
