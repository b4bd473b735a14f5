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

#include <cstdint>
#include <string>
#include <vector>

namespace maq {

struct ScoreReport {
    std::vector<std::int64_t> per_column;
    std::int64_t total = 0;
};

/// Sum-of-pairs score: per column, the number of row pairs holding two
/// different non-gap characters. Lower is better; 0 is ideal.
ScoreReport score_alignment(const AlignmentBlock& block);

/// Column sum-of-pairs cost with match 0, mismatch 1, residue-vs-gap
/// `gap_penalty`, gap-vs-gap 0. With gap_penalty = 0 this is score_alignment.
double weighted_sp_cost(const AlignmentBlock& block, double gap_penalty);

/// "column\tscore" header, one 1-based row per column, then "total\t<n>".
std::string score_report_tsv(const ScoreReport& report);

} // namespace maq
