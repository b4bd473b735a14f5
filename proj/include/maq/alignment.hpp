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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace maq {

inline constexpr char kGap = '-';

/// Equal-width gapped rows, one per record id.
struct AlignmentBlock {
    std::vector<std::string> ids;
    std::vector<std::string> rows;

    std::size_t width() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
    std::size_t size() const noexcept { return rows.size(); }

    /// Throws RaggedBlock unless ids and rows pair up and share one width.
    void validate() const;

    std::size_t index_of(std::string_view id) const;

    bool operator==(const AlignmentBlock&) const = default;
};

std::string degap(std::string_view row);

/// Aligned FASTA: gapped rows under their ids.
std::string block_to_fasta(const AlignmentBlock& block);

/// Plain table: padded id column followed by space-separated characters.
std::string block_to_table(const AlignmentBlock& block);

} // namespace maq
