// Copyright 2026 The greenberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace greenberg {

/// Stable machine-readable error codes. The textual names returned by
/// `error_code_name` appear in CLI reports and must not change.
enum class ErrorCode {
    NotPrime,
    Reducible,
    DegreeTooLarge,
    BaseMismatch,
    SizeGuard,
    RingMismatch,
    NotDivisible,
    MissingVariable,
    CoefficientLiftUndefined,
    ExponentOverflow,
    LengthMismatch,
    NotEisenstein,
    GradingViolation,
    CarrierMismatch,
    DegreeTooHigh,
    LevelMismatch,
    NotPrimeField,
    IdentityNotOnScheme,
    NotAnExtension,
    NotPrimeFieldBase,
    DecompositionFailure,
    PatternMismatch,
    CoefficientNotInBasisSpan,
    ParseError,
    InvalidArgument,
    Io,
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::BaseMismatch: return "BaseMismatch";
        case ErrorCode::SizeGuard: return "SizeGuard";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::MissingVariable: return "MissingVariable";
        case ErrorCode::CoefficientLiftUndefined: return "CoefficientLiftUndefined";
        case ErrorCode::ExponentOverflow: return "ExponentOverflow";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotEisenstein: return "NotEisenstein";
        case ErrorCode::GradingViolation: return "GradingViolation";
        case ErrorCode::CarrierMismatch: return "CarrierMismatch";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::NotPrimeField: return "NotPrimeField";
        case ErrorCode::IdentityNotOnScheme: return "IdentityNotOnScheme";
        case ErrorCode::NotAnExtension: return "NotAnExtension";
        case ErrorCode::NotPrimeFieldBase: return "NotPrimeFieldBase";
        case ErrorCode::DecompositionFailure: return "DecompositionFailure";
        case ErrorCode::PatternMismatch: return "PatternMismatch";
        case ErrorCode::CoefficientNotInBasisSpan: return "CoefficientNotInBasisSpan";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Desk-scale limits shared by enumeration routines.
struct Guards {
    /// Maximum number of elements of an enumerated finite algebra or ring.
    std::uint64_t size_guard = 4096;
    /// Maximum number of candidate tuples in a brute-force solve.
    std::uint64_t candidate_guard = std::uint64_t{1} << 24;
    /// Maximum number of terms of a constructed polynomial.
    std::uint64_t term_guard = 1000000;
};

}  // namespace greenberg
