#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace procgame::cli {

// Runs the command line given argv-style arguments with the program name
// already stripped. Output goes to the given streams; the return value is
// the process exit code:
//
//   0  success
//   1  usage or internal error
//   2  the game has no pure equilibrium path
//   3  syntax error in a game file
//   4  equilibrium selection was ambiguous under --tie-break error
//   5  the game file does not resolve or fails validation
//   6  a node budget was exceeded
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace procgame::cli
