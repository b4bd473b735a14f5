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

#include "maq/alignment.hpp"
#include "maq/cluster.hpp"
#include "maq/seqio.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maq {

/// Gap columns to insert into every row of a block. Each entry inserts
/// `count` gaps before original column `position` (position == width appends).
struct GapScript {
    std::vector<std::pair<std::size_t, std::size_t>> insertions;

    bool empty() const noexcept { return insertions.empty(); }
    std::size_t total() const noexcept;
    bool operator==(const GapScript&) const = default;
};

std::string apply_gap_script(std::string_view row, const GapScript& script);
AlignmentBlock apply_gap_script(const AlignmentBlock& block, const GapScript& script);

struct AnchorScripts {
    GapScript merged;   // applied to the block aligned so far
    GapScript incoming; // applied to the newly aligned cluster block
};

/// Union of the two gap patterns of one anchor sequence: afterwards both
/// rows are identical. Throws AnchorMismatch if the rows degap differently.
AnchorScripts reconcile_anchor(std::string_view merged_row, std::string_view incoming_row);

struct ProgressiveState {
    AlignmentBlock merged;
    std::string anchor_id; // center of the most recently merged cluster

    bool empty() const noexcept { return merged.rows.empty(); }
    const std::string& anchor_row() const { return merged.rows[merged.index_of(anchor_id)]; }
};

/// Sequences entering one cluster's CAF problem.
struct ClusterInput {
    std::vector<std::string> ids;
    std::vector<std::string> residues;
    std::optional<std::size_t> anchor_index; // position of the previous center
};

/// Cluster members plus, after the first cluster, the previous center.
ClusterInput append_anchor(const Cluster& cluster, const ProgressiveState& state,
                           const Dataset& dataset);

/// Reconciles the shared anchor, pads both blocks, drops the incoming copy of
/// the anchor and moves the anchor to `new_center`.
ProgressiveState merge_blocks(ProgressiveState state, const AlignmentBlock& incoming,
                              const std::string& new_center);

} // namespace maq
