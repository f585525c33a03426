#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mccg {

// Entry point behind the mccg binary. args excludes the program name.
// Exit status: 0 success (>=1 parse / >=1 order / all cases pass),
// 1 negative outcome (no parse / no order / failing cases), 2 errors.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mccg
