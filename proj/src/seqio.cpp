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

#include "maq/seqio.hpp"

#include "maq/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace maq {

namespace {

constexpr std::string_view kNucleotides = "ACGTUN";
// IUPAC amino-acid codes, ambiguity letters included.
constexpr std::string_view kProtein = "ABCDEFGHIKLMNOPQRSTUVWXYZ";

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string_view to_string(Alphabet alphabet)
{
    return alphabet == Alphabet::Nucleotide ? "nucleotide" : "protein";
}

Dataset::Dataset(std::vector<SequenceRecord> records, Alphabet alphabet)
    : records_(std::move(records)), alphabet_(alphabet)
{
    std::unordered_set<std::string_view> seen;
    for (const auto& r : records_) {
        if (!seen.insert(r.id).second)
            throw Error(ErrorCode::DuplicateId, "duplicate record id '" + r.id + "'");
        max_len_ = std::max(max_len_, r.residues.size());
    }
}

std::size_t Dataset::index_of(std::string_view id) const
{
    for (std::size_t i = 0; i < records_.size(); ++i)
        if (records_[i].id == id)
            return i;
    throw Error(ErrorCode::InvalidArgument, "unknown record id '" + std::string(id) + "'");
}

Dataset parse_fasta(std::string_view text)
{
    std::vector<SequenceRecord> records;
    std::size_t line_no = 0;

    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        if (!line.empty() && line.front() == '>') {
            auto header = trim(line.substr(1));
            auto split = std::find_if(header.begin(), header.end(), is_space);
            SequenceRecord rec;
            rec.id.assign(header.begin(), split);
            if (rec.id.empty())
                throw Error(ErrorCode::MissingHeader,
                            "empty record id on line " + std::to_string(line_no));
            rec.description = std::string(trim(std::string_view(split, header.end())));
            records.push_back(std::move(rec));
            continue;
        }

        line = trim(line);
        if (line.empty() || line.front() == ';')
            continue;
        if (records.empty())
            throw Error(ErrorCode::MissingHeader,
                        "sequence data before first '>' on line " + std::to_string(line_no));

        auto& residues = records.back().residues;
        for (char c : line) {
            if (is_space(c))
                continue;
            char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (kProtein.find(u) == std::string_view::npos)
                throw Error(ErrorCode::InvalidChar,
                            std::string("residue '") + c + "' on line " + std::to_string(line_no));
            residues.push_back(u);
        }
    }

    if (records.empty())
        throw Error(ErrorCode::EmptyFile, "no FASTA records");
    for (const auto& r : records)
        if (r.residues.empty())
            throw Error(ErrorCode::EmptyFile, "record '" + r.id + "' has no residues");

    bool nucleotide = std::all_of(records.begin(), records.end(), [](const SequenceRecord& r) {
        return r.residues.find_first_not_of(kNucleotides) == std::string::npos;
    });
    return Dataset(std::move(records), nucleotide ? Alphabet::Nucleotide : Alphabet::Protein);
}

std::string write_fasta(const Dataset& dataset)
{
    std::string out;
    for (const auto& r : dataset.records()) {
        out += '>';
        out += r.id;
        if (!r.description.empty()) {
            out += ' ';
            out += r.description;
        }
        out += '\n';
        for (std::size_t i = 0; i < r.residues.size(); i += 60) {
            out.append(r.residues, i, 60);
            out += '\n';
        }
    }
    return out;
}

std::string canonical_residues(const SequenceRecord& record, Alphabet alphabet)
{
    std::string s = record.residues;
    if (alphabet == Alphabet::Nucleotide)
        std::replace(s.begin(), s.end(), 'U', 'T');
    return s;
}

} // namespace maq
