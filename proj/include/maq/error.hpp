// Copyright 2026 The MAQ Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maq {

enum class ErrorCode {
    // input
    EmptyFile,
    DuplicateId,
    InvalidChar,
    MissingHeader,
    SequenceTooShort,
    InvalidArgument,
    Io,
    TooLarge,
    // solver
    NeverFeasible,
    Infeasible,
    // internal
    ParamMismatch,
    SingleSequence,
    PenaltyTooSmall,
    LengthMismatch,
    AnchorMismatch,
    WidthMismatch,
    RaggedBlock,
    Internal,
};

std::string_view to_string(ErrorCode code);

/// Process exit code for an error: 2 input, 3 solver infeasibility, 4 internal.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace maq
