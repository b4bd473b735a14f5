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

#include "maq/qubo.hpp"

#include <algorithm>
#include <iterator>

namespace maq {

CafProblem::CafProblem(std::vector<std::size_t> lengths, std::size_t gap_budget, double gap_penalty,
                       std::optional<std::size_t> max_len)
    : lengths_(std::move(lengths)), gap_budget_(gap_budget), gap_penalty_(gap_penalty)
{
    if (lengths_.empty())
        throw Error(ErrorCode::InvalidArgument, "CAF problem needs at least one sequence");
    if (!(gap_penalty_ >= 0.0 && gap_penalty_ < mismatch_penalty()))
        throw Error(ErrorCode::InvalidArgument, "gap penalty must lie in [0, 1)");

    std::size_t longest = 0;
    for (std::size_t len : lengths_) {
        if (len == 0)
            throw Error(ErrorCode::InvalidArgument, "CAF problem with an empty sequence");
        first_element_.push_back(total_elements_);
        total_elements_ += len;
        longest = std::max(longest, len);
    }
    max_len_ = max_len.value_or(longest);
    if (max_len_ < longest)
        throw Error(ErrorCode::InvalidArgument,
                    "max_len " + std::to_string(max_len_) + " below longest sequence " +
                        std::to_string(longest));
}

CafProblem::Slot CafProblem::slot(Eigen::Index var) const
{
    const auto v = static_cast<std::size_t>(var);
    const std::size_t element = v / columns();
    auto it = std::upper_bound(first_element_.begin(), first_element_.end(), element);
    const auto s = static_cast<std::size_t>(std::distance(first_element_.begin(), it) - 1);
    return {s, element - first_element_[s], v % columns()};
}

std::size_t variable_count(const CafProblem& problem)
{
    return problem.num_vars();
}

WeightsMatrix::WeightsMatrix(std::span<const std::string> sequences)
{
    if (sequences.size() < 2)
        throw Error(ErrorCode::SingleSequence, "weights need at least two sequences");
    for (const auto& s : sequences)
        lengths_.push_back(s.size());
    for (std::size_t s1 = 0; s1 < sequences.size(); ++s1) {
        for (std::size_t s2 = s1 + 1; s2 < sequences.size(); ++s2) {
            const auto& a = sequences[s1];
            const auto& b = sequences[s2];
            Block w(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i] == b[j] ? 0 : 1;
            blocks_.push_back(std::move(w));
        }
    }
}

WeightsMatrix build_weights(std::span<const std::string> sequences)
{
    return WeightsMatrix(sequences);
}

double penalty_bound(const CafProblem& problem)
{
    const auto l = static_cast<double>(problem.seq_count());
    double cross = 0.0;
    auto lengths = problem.lengths();
    for (std::size_t i = 0; i < lengths.size(); ++i)
        for (std::size_t j = i + 1; j < lengths.size(); ++j)
            cross += static_cast<double>(lengths[i] * lengths[j]);
    return 1.0 + problem.gap_penalty() * l * l * static_cast<double>(problem.columns()) + cross;
}

CafPenalties default_penalties(const CafProblem& problem)
{
    const double bound = penalty_bound(problem);
    return {bound, bound};
}

} // namespace maq
