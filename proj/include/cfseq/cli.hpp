#ifndef CFSEQ_CLI_HPP
#define CFSEQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cfseq::cli {

/// Dispatch one invocation. Exit status: 0 success, 1 mathematical
/// refusal or failed verification, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cfseq::cli

#endif
