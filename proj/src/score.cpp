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

#include "maq/score.hpp"

#include "maq/error.hpp"

namespace maq {

ScoreReport score_alignment(const AlignmentBlock& block)
{
    block.validate();
    ScoreReport report;
    report.per_column.assign(block.width(), 0);
    for (std::size_t c = 0; c < block.width(); ++c) {
        std::int64_t column = 0;
        for (std::size_t i = 0; i < block.size(); ++i) {
            const char a = block.rows[i][c];
            if (a == kGap)
                continue;
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                const char b = block.rows[j][c];
                if (b != kGap && a != b)
                    ++column;
            }
        }
        report.per_column[c] = column;
        report.total += column;
    }
    return report;
}

double weighted_sp_cost(const AlignmentBlock& block, double gap_penalty)
{
    block.validate();
    double cost = 0.0;
    for (std::size_t c = 0; c < block.width(); ++c) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                const char a = block.rows[i][c];
                const char b = block.rows[j][c];
                const bool gap_a = a == kGap;
                const bool gap_b = b == kGap;
                if (gap_a && gap_b)
                    continue;
                if (gap_a != gap_b)
                    cost += gap_penalty;
                else if (a != b)
                    cost += 1.0;
            }
        }
    }
    return cost;
}

std::string score_report_tsv(const ScoreReport& report)
{
    std::string out = "column\tscore\n";
    for (std::size_t c = 0; c < report.per_column.size(); ++c)
        out += std::to_string(c + 1) + '\t' + std::to_string(report.per_column[c]) + '\n';
    out += "total\t" + std::to_string(report.total) + '\n';
    return out;
}

} // namespace maq
