#ifndef DRH_CLI_HPP
#define DRH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace drh {

// Entry point shared by the binary and the tests. args excludes the program
// name. Exit codes: eq 0 equal / 1 unequal / 2 error; other subcommands
// 0 success / 2 error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drh

#endif
