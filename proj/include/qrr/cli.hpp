#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrr {

// Exit status: 0 when every report verified, 2 when some did not, 1 on a
// configuration, parse or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& identity_ids();

}  // namespace qrr
