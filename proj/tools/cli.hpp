#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bcfib::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 success,
/// 1 when a verification reports a FAIL, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 15 significant digits of sqrt(radicand), locale independent.
std::string approx_sqrt(const mpz_class& radicand);

}  // namespace bcfib::cli
