#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2cal {

/// Command dispatch for the g2cal tool. Returns 0 on success, 1 when a
/// requested check fails or input data is invalid, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace g2cal
