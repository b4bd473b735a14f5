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

#include "maq/merge.hpp"

#include "maq/error.hpp"

namespace maq {

namespace {

void push_insertion(GapScript& script, std::size_t position)
{
    if (!script.insertions.empty() && script.insertions.back().first == position)
        ++script.insertions.back().second;
    else
        script.insertions.emplace_back(position, 1);
}

} // namespace

std::size_t GapScript::total() const noexcept
{
    std::size_t sum = 0;
    for (const auto& [pos, count] : insertions)
        sum += count;
    return sum;
}

std::string apply_gap_script(std::string_view row, const GapScript& script)
{
    std::string out;
    out.reserve(row.size() + script.total());
    std::size_t next = 0;
    for (std::size_t c = 0; c <= row.size(); ++c) {
        while (next < script.insertions.size() && script.insertions[next].first == c)
            out.append(script.insertions[next++].second, kGap);
        if (c < row.size())
            out += row[c];
    }
    if (next != script.insertions.size())
        throw Error(ErrorCode::WidthMismatch, "gap script position beyond row width");
    return out;
}

AlignmentBlock apply_gap_script(const AlignmentBlock& block, const GapScript& script)
{
    AlignmentBlock out;
    out.ids = block.ids;
    for (const auto& row : block.rows)
        out.rows.push_back(apply_gap_script(row, script));
    return out;
}

AnchorScripts reconcile_anchor(std::string_view merged_row, std::string_view incoming_row)
{
    if (degap(merged_row) != degap(incoming_row))
        throw Error(ErrorCode::AnchorMismatch, "anchor rows hold different residues: '" +
                                                   std::string(merged_row) + "' vs '" +
                                                   std::string(incoming_row) + "'");
    AnchorScripts scripts;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < merged_row.size() || j < incoming_row.size()) {
        const bool gap_a = i < merged_row.size() && merged_row[i] == kGap;
        const bool gap_b = j < incoming_row.size() && incoming_row[j] == kGap;
        if (gap_a && gap_b) {
            ++i;
            ++j;
        } else if (gap_a) {
            push_insertion(scripts.incoming, j);
            ++i;
        } else if (gap_b) {
            push_insertion(scripts.merged, i);
            ++j;
        } else {
            // Both at the same residue (equal degapped content).
            ++i;
            ++j;
        }
    }
    return scripts;
}

ClusterInput append_anchor(const Cluster& cluster, const ProgressiveState& state,
                           const Dataset& dataset)
{
    ClusterInput input;
    for (const auto& id : cluster.members) {
        input.ids.push_back(id);
        input.residues.push_back(dataset[dataset.index_of(id)].residues);
    }
    if (!state.empty()) {
        input.anchor_index = input.ids.size();
        input.ids.push_back(state.anchor_id);
        input.residues.push_back(degap(state.anchor_row()));
    }
    return input;
}

ProgressiveState merge_blocks(ProgressiveState state, const AlignmentBlock& incoming,
                              const std::string& new_center)
{
    incoming.validate();
    if (state.empty()) {
        state.merged = incoming;
        state.anchor_id = new_center;
        return state;
    }
    state.merged.validate();

    const std::size_t anchor_in = incoming.index_of(state.anchor_id);
    const auto scripts = reconcile_anchor(state.anchor_row(), incoming.rows[anchor_in]);
    AlignmentBlock left = apply_gap_script(state.merged, scripts.merged);
    AlignmentBlock right = apply_gap_script(incoming, scripts.incoming);

    if (left.width() != right.width() ||
        left.rows[left.index_of(state.anchor_id)] != right.rows[anchor_in])
        throw Error(ErrorCode::WidthMismatch, "anchor rows differ after reconciliation");

    for (std::size_t r = 0; r < right.size(); ++r) {
        if (r == anchor_in)
            continue;
        left.ids.push_back(std::move(right.ids[r]));
        left.rows.push_back(std::move(right.rows[r]));
    }
    state.merged = std::move(left);
    state.anchor_id = new_center;
    state.merged.validate();
    return state;
}

} // namespace maq
