// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/error.hpp>

namespace hmeas {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::BadSubsystemIndex: return "BadSubsystemIndex";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::BadCut: return "BadCut";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::EigenFailure: return "EigenFailure";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::BadOrder: return "BadOrder";
        case ErrorCode::NotTwoFermion: return "NotTwoFermion";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NoOracleApplicable: return "NoOracleApplicable";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace hmeas
