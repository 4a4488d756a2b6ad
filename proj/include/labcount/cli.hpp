#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace labcount {

/// Runs one subcommand; JSON (or CSV) report on out, diagnostics on err.
/// Exit codes: 0 ran to completion (verification outcomes live in the
/// report's status field), 2 usage error, 3 input error, 4 guardrail refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace labcount
