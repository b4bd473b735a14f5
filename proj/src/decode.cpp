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

#include "maq/decode.hpp"

#include "maq/error.hpp"
#include "maq/solver.hpp"

#include <algorithm>

namespace maq {

void AlignmentBlock::validate() const
{
    if (ids.size() != rows.size())
        throw Error(ErrorCode::RaggedBlock, "ids and rows differ in count");
    for (const auto& r : rows)
        if (r.size() != width())
            throw Error(ErrorCode::RaggedBlock, "rows differ in width");
}

std::size_t AlignmentBlock::index_of(std::string_view id) const
{
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end())
        throw Error(ErrorCode::InvalidArgument, "id '" + std::string(id) + "' not in block");
    return static_cast<std::size_t>(it - ids.begin());
}

std::string degap(std::string_view row)
{
    std::string out;
    out.reserve(row.size());
    for (char c : row)
        if (c != kGap)
            out += c;
    return out;
}

std::string block_to_fasta(const AlignmentBlock& block)
{
    std::string out;
    for (std::size_t i = 0; i < block.size(); ++i) {
        out += '>' + block.ids[i] + '\n';
        out += block.rows[i] + '\n';
    }
    return out;
}

std::string block_to_table(const AlignmentBlock& block)
{
    std::size_t pad = 2;
    for (const auto& id : block.ids)
        pad = std::max(pad, id.size());
    std::string out = "ID" + std::string(pad - 2, ' ');
    out += "  Sequence Alignment\n";
    for (std::size_t i = 0; i < block.size(); ++i) {
        out += block.ids[i] + std::string(pad - block.ids[i].size(), ' ') + ' ';
        for (char c : block.rows[i]) {
            out += ' ';
            out += c;
        }
        out += '\n';
    }
    return out;
}

AlignmentBlock decode_assignment(const Assignment& x, const CafProblem& problem,
                                 std::span<const std::string> ids,
                                 std::span<const std::string> residues)
{
    if (ids.size() != problem.seq_count() || residues.size() != problem.seq_count())
        throw Error(ErrorCode::LengthMismatch, "decode: sequence count mismatch");
    for (std::size_t s = 0; s < residues.size(); ++s)
        if (residues[s].size() != problem.length(s))
            throw Error(ErrorCode::LengthMismatch, "decode: length mismatch for '" + ids[s] + "'");

    auto check = check_feasible(x, problem);
    if (!check.feasible) {
        const auto& v = check.violations.front();
        throw Error(ErrorCode::Infeasible, "sequence '" + ids[v.sequence] + "' element " +
                                               std::to_string(v.element) + ": " + v.detail);
    }

    AlignmentBlock block;
    const std::size_t cols = problem.columns();
    for (std::size_t s = 0; s < problem.seq_count(); ++s) {
        std::string row(cols, kGap);
        for (std::size_t n = 0; n < problem.length(s); ++n)
            for (std::size_t c = 0; c < cols; ++c)
                if (x(problem.var_index(s, n, c)))
                    row[c] = residues[s][n];
        block.ids.push_back(ids[s]);
        block.rows.push_back(std::move(row));
    }
    return block;
}

Assignment encode_alignment(const AlignmentBlock& block, const CafProblem& problem)
{
    block.validate();
    if (block.size() != problem.seq_count() || block.width() != problem.columns())
        throw Error(ErrorCode::WidthMismatch, "block shape does not match the CAF problem");
    Assignment x = Assignment::Zero(static_cast<Eigen::Index>(problem.num_vars()));
    for (std::size_t s = 0; s < block.size(); ++s) {
        std::size_t n = 0;
        for (std::size_t c = 0; c < block.width(); ++c) {
            if (block.rows[s][c] == kGap)
                continue;
            if (n >= problem.length(s))
                throw Error(ErrorCode::LengthMismatch, "row '" + block.ids[s] + "' too long");
            x(problem.var_index(s, n++, c)) = 1;
        }
        if (n != problem.length(s))
            throw Error(ErrorCode::LengthMismatch, "row '" + block.ids[s] + "' too short");
    }
    return x;
}

} // namespace maq
