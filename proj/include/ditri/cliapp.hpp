#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ditri {

inline const char* kVersion = "0.1.0";

/* Runs the command line tool on argv-style arguments (program name excluded).
   Returns the process exit code: 0 on success / positive answers, 1 on negative
   mathematical answers, 2 on usage and input errors. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli_main(int argc, char** argv);

} // namespace ditri
