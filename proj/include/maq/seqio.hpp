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

enum class Alphabet { Protein, Nucleotide };

std::string_view to_string(Alphabet alphabet);

struct SequenceRecord {
    std::string id;
    std::string description;
    std::string residues;

    bool operator==(const SequenceRecord&) const = default;
};

/// Parsed FASTA input. Records keep file order; ids are unique.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<SequenceRecord> records, Alphabet alphabet);

    const std::vector<SequenceRecord>& records() const noexcept { return records_; }
    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t max_len() const noexcept { return max_len_; }
    std::size_t count() const noexcept { return records_.size(); }

    const SequenceRecord& operator[](std::size_t i) const { return records_[i]; }

    /// Index of the record with this id; throws InvalidArgument when absent.
    std::size_t index_of(std::string_view id) const;

    bool operator==(const Dataset&) const = default;

private:
    std::vector<SequenceRecord> records_;
    Alphabet alphabet_ = Alphabet::Protein;
    std::size_t max_len_ = 0;
};

/// Parses FASTA text. Residues are uppercased; the alphabet is nucleotide
/// iff every residue is one of ACGTUN.
Dataset parse_fasta(std::string_view text);

/// Writes records as FASTA, 60 residues per line.
std::string write_fasta(const Dataset& dataset);

/// Residues with 'U' mapped to 'T' for nucleotide data, unchanged otherwise.
std::string canonical_residues(const SequenceRecord& record, Alphabet alphabet);

} // namespace maq
