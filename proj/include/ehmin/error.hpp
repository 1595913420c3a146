// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmeas {

enum class ErrorCode {
    LengthMismatch,
    ZeroVector,
    NotNormalized,
    BadSubsystemIndex,
    NotHermitian,
    BadCut,
    DimMismatch,
    EigenFailure,
    ArityMismatch,
    BadLength,
    InvalidConfig,
    BadOrder,
    NotTwoFermion,
    ConvergenceFailure,
    NotBipartite,
    NoOracleApplicable,
    ParseError,
    IoError,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hmeas
