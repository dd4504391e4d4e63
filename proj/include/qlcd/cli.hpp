#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlcd {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  ///< verification mismatch, or codes inequivalent
  kExitUsage = 2,     ///< bad arguments or unreadable input
  kExitInvalid = 3,   ///< internal validation failure
  kExitInterrupted = 130,
};

/// Largest dimension-3 search length run without --long-run.
inline constexpr int kDeskMaxLength = 30;

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Set by the SIGINT handler; long searches poll it and checkpoint.
std::atomic<bool>& interrupt_flag();
void install_interrupt_handler();

}  // namespace qlcd
