#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexp::cli {

/// Runs one CLI invocation. `args` excludes the program name. Everything the
/// command prints goes through `out`/`err`, so invocations are testable
/// in-process and byte-deterministic for a fixed argument list.
///
/// Exit codes: 0 on success (and for `check`/`optimize`, when the verified
/// property holds); 1 when a computation rejects its inputs or a scheme
/// cannot be constructed; 2 for unknown subcommands, flags, or malformed
/// flag values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace lexp::cli
