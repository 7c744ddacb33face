// SPDX-FileCopyrightText: 2026 Contributors to the mcbe project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace mcbe::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kIoError = 3,
};

/// Runs the command line `argv` (argv[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`; standard input is read when a
/// subcommand is given "-" as its input path.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcbe::cli
