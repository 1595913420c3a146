// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmeas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;    ///< bad arguments, unreadable or malformed input
inline constexpr int kExitConfig = 3;   ///< invalid GA configuration
inline constexpr int kExitDomain = 4;   ///< e.g. no oracle applies, not a two-fermion state

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmeas::cli
