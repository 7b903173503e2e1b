// Command-line front end: canonical-format I/O, one verb per library
// operation, DOT export, and the build-expression grammar.

#ifndef SSET_CLI_HPP
#define SSET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sset {

/// Dispatch a command line.  Returns 0 on success / true verdicts, 1 on
/// false mathematical verdicts (a witness is printed), 2 on input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sset

#endif
