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

#include "maq/error.hpp"
#include "maq/io.hpp"

#include <filesystem>
#include <fstream>
#include <system_error>

namespace maq {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidChar: return "InvalidChar";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::SequenceTooShort: return "SequenceTooShort";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NeverFeasible: return "NeverFeasible";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::SingleSequence: return "SingleSequence";
    case ErrorCode::PenaltyTooSmall: return "PenaltyTooSmall";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::RaggedBlock: return "RaggedBlock";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

int exit_code(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyFile:
    case ErrorCode::DuplicateId:
    case ErrorCode::InvalidChar:
    case ErrorCode::MissingHeader:
    case ErrorCode::SequenceTooShort:
    case ErrorCode::InvalidArgument:
    case ErrorCode::Io:
    case ErrorCode::TooLarge:
        return 2;
    case ErrorCode::NeverFeasible:
    case ErrorCode::Infeasible:
        return 3;
    default:
        return 4;
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::Io, "cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out)
            throw Error(ErrorCode::Io, "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::Io, "cannot rename onto " + path.string());
    }
}

} // namespace maq
