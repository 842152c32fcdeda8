#ifndef QCONTEXT_CLI_HPP
#define QCONTEXT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qcontext {

// Parses and runs one command line (without the program name). Returns the
// process exit code: 0 success, 1 domain error (one diagnostic line on err),
// 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcontext

#endif
