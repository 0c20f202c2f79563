#ifndef EULERGAMMA_CLI_HPP
#define EULERGAMMA_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eulergamma/precision.hpp"

namespace eulergamma::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Parses a parameter value: a decimal literal, a fraction "p/q", or one of
/// the names e, pi, ln2. Throws std::invalid_argument on anything else.
BigReal parse_parameter(std::string_view text, Bits precision);

/// Runs one subcommand (compute, verify, exponent, bench). Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulergamma::cli

#endif  // EULERGAMMA_CLI_HPP
