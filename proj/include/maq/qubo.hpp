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

#include "maq/error.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maq {

using Assignment = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;

/// Quadratic binary model over x in {0,1}^n:
///   energy(x) = offset + linear . x + x^T U x
/// with U strictly upper triangular.
template <typename Scalar = double>
class Qubo {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

    Qubo() = default;
    Qubo(Vector linear, SparseMatrix upper, Scalar offset)
        : linear_(std::move(linear)), upper_(std::move(upper)), offset_(offset)
    {
        upper_.makeCompressed();
    }

    Eigen::Index num_vars() const noexcept { return linear_.size(); }
    const Vector& linear() const noexcept { return linear_; }
    const SparseMatrix& upper() const noexcept { return upper_; }
    Scalar offset() const noexcept { return offset_; }

    /// U + U^T, row-major, for neighbour walks.
    SparseMatrix symmetric() const
    {
        SparseMatrix lower = upper_.transpose();
        SparseMatrix sym = upper_ + lower;
        sym.makeCompressed();
        return sym;
    }

    template <typename Derived>
    Scalar energy(const Eigen::MatrixBase<Derived>& x) const
    {
        if (x.size() != num_vars())
            throw Error(ErrorCode::LengthMismatch, "assignment length " + std::to_string(x.size()) +
                                                       " != " + std::to_string(num_vars()));
        const Vector xs = x.template cast<Scalar>();
        return offset_ + linear_.dot(xs) + xs.dot(upper_ * xs);
    }

    /// "i j coeff" per nonzero term (i == j for linear), ordered by (i, j),
    /// then "offset value".
    std::string dump() const
    {
        std::string out;
        char buf[96];
        for (Eigen::Index i = 0; i < num_vars(); ++i) {
            if (linear_(i) != Scalar(0)) {
                std::snprintf(buf, sizeof buf, "%td %td %.17g\n", i, i, double(linear_(i)));
                out += buf;
            }
            for (typename SparseMatrix::InnerIterator it(upper_, i); it; ++it) {
                if (it.value() == Scalar(0))
                    continue;
                std::snprintf(buf, sizeof buf, "%td %td %.17g\n", i, it.col(), double(it.value()));
                out += buf;
            }
        }
        std::snprintf(buf, sizeof buf, "offset %.17g\n", double(offset_));
        out += buf;
        return out;
    }

private:
    Vector linear_;
    SparseMatrix upper_;
    Scalar offset_ = Scalar(0);
};

/// Accumulates terms in any index order; duplicates add up.
template <typename Scalar = double>
class QuboBuilder {
public:
    explicit QuboBuilder(Eigen::Index num_vars)
        : linear_(Qubo<Scalar>::Vector::Zero(num_vars)) {}

    void add_linear(Eigen::Index i, Scalar v) { linear_(i) += v; }

    void add_quadratic(Eigen::Index i, Eigen::Index j, Scalar v)
    {
        if (i == j) {
            linear_(i) += v; // x^2 = x
            return;
        }
        if (i > j)
            std::swap(i, j);
        triplets_.emplace_back(i, j, v);
    }

    void add_offset(Scalar v) { offset_ += v; }

    Qubo<Scalar> build() const
    {
        typename Qubo<Scalar>::SparseMatrix upper(linear_.size(), linear_.size());
        upper.setFromTriplets(triplets_.begin(), triplets_.end());
        upper.prune(Scalar(0));
        return Qubo<Scalar>(linear_, std::move(upper), offset_);
    }

private:
    typename Qubo<Scalar>::Vector linear_;
    std::vector<Eigen::Triplet<Scalar>> triplets_;
    Scalar offset_ = Scalar(0);
};

/// Column Alignment Formulation for one cluster: binary x(s, n, c) says that
/// element n of sequence s sits in column c, with C = N + G columns.
/// All indices are 0-based.
class CafProblem {
public:
    /// max_len defaults to the longest of `lengths`; pass a larger value to
    /// share one column count across clusters.
    CafProblem(std::vector<std::size_t> lengths, std::size_t gap_budget, double gap_penalty,
               std::optional<std::size_t> max_len = std::nullopt);

    std::size_t seq_count() const noexcept { return lengths_.size(); }
    std::span<const std::size_t> lengths() const noexcept { return lengths_; }
    std::size_t length(std::size_t s) const { return lengths_[s]; }
    std::size_t max_len() const noexcept { return max_len_; }
    std::size_t gap_budget() const noexcept { return gap_budget_; }
    std::size_t columns() const noexcept { return max_len_ + gap_budget_; }
    double gap_penalty() const noexcept { return gap_penalty_; }
    double mismatch_penalty() const noexcept { return 1.0; }
    std::size_t total_elements() const noexcept { return total_elements_; }
    std::size_t num_vars() const noexcept { return columns() * total_elements_; }

    Eigen::Index var_index(std::size_t s, std::size_t n, std::size_t c) const
    {
        return static_cast<Eigen::Index>((first_element_[s] + n) * columns() + c);
    }

    struct Slot {
        std::size_t sequence;
        std::size_t element;
        std::size_t column;
    };
    Slot slot(Eigen::Index var) const;

private:
    std::vector<std::size_t> lengths_;
    std::vector<std::size_t> first_element_;
    std::size_t max_len_ = 0;
    std::size_t gap_budget_ = 0;
    double gap_penalty_ = 0.5;
    std::size_t total_elements_ = 0;
};

/// Spin usage of one solver call: C * sum of sequence lengths.
std::size_t variable_count(const CafProblem& problem);

/// Pairwise element mismatch indicators w(s1, n1, s2, n2) in {0, 1}.
class WeightsMatrix {
public:
    using Block = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

    WeightsMatrix() = default;
    explicit WeightsMatrix(std::span<const std::string> sequences);

    std::size_t seq_count() const noexcept { return lengths_.size(); }

    std::uint8_t operator()(std::size_t s1, std::size_t n1, std::size_t s2, std::size_t n2) const
    {
        if (s1 > s2) {
            std::swap(s1, s2);
            std::swap(n1, n2);
        }
        return blocks_[pair_index(s1, s2)](static_cast<Eigen::Index>(n1),
                                           static_cast<Eigen::Index>(n2));
    }

    const Block& block(std::size_t s1, std::size_t s2) const { return blocks_[pair_index(s1, s2)]; }

private:
    std::size_t pair_index(std::size_t s1, std::size_t s2) const
    {
        const std::size_t l = lengths_.size();
        return s1 * l - s1 * (s1 + 1) / 2 + (s2 - s1 - 1);
    }

    std::vector<std::size_t> lengths_;
    std::vector<Block> blocks_;
};

WeightsMatrix build_weights(std::span<const std::string> sequences);

struct CafPenalties {
    double assign = 0.0; // one column per element
    double order = 0.0;  // consecutive elements strictly left to right
};

/// 1 + g L^2 C + sum_{s1<s2} N_s1 N_s2, an upper bound on the objective.
double penalty_bound(const CafProblem& problem);

CafPenalties default_penalties(const CafProblem& problem);

/// Energy = objective + A * sum_{s,n} (sum_c x - 1)^2
///        + B * sum_{s,n} sum_{c' <= c} x(s,n,c) x(s,n+1,c').
/// The objective prices, per column and sequence pair, mismatching residues at
/// 1 and a residue facing a gap at g; on feasible assignments the energy is the
/// column sum-of-pairs cost of the decoded alignment.
template <typename Scalar = double>
Qubo<Scalar> build_caf_qubo(const CafProblem& problem, const WeightsMatrix& weights,
                            std::optional<CafPenalties> penalties = std::nullopt)
{
    if (weights.seq_count() != problem.seq_count())
        throw Error(ErrorCode::LengthMismatch, "weights and problem disagree on sequence count");

    const double bound = penalty_bound(problem);
    const CafPenalties p = penalties.value_or(default_penalties(problem));
    if (p.assign < bound || p.order < bound)
        throw Error(ErrorCode::PenaltyTooSmall,
                    "penalties must be >= " + std::to_string(bound));

    const std::size_t cols = problem.columns();
    const std::size_t seqs = problem.seq_count();
    const auto g = static_cast<Scalar>(problem.gap_penalty());
    const auto a = static_cast<Scalar>(p.assign);
    const auto b = static_cast<Scalar>(p.order);

    QuboBuilder<Scalar> q(static_cast<Eigen::Index>(problem.num_vars()));

    for (std::size_t s = 0; s < seqs; ++s) {
        for (std::size_t n = 0; n < problem.length(s); ++n) {
            // (sum_c x - 1)^2 = 1 - sum_c x + 2 sum_{c<c'} x x'
            q.add_offset(a);
            for (std::size_t c = 0; c < cols; ++c) {
                q.add_linear(problem.var_index(s, n, c), -a);
                for (std::size_t c2 = c + 1; c2 < cols; ++c2)
                    q.add_quadratic(problem.var_index(s, n, c), problem.var_index(s, n, c2), 2 * a);
            }
            if (n + 1 < problem.length(s)) {
                for (std::size_t c = 0; c < cols; ++c)
                    for (std::size_t c2 = 0; c2 <= c; ++c2)
                        q.add_quadratic(problem.var_index(s, n, c), problem.var_index(s, n + 1, c2), b);
            }
        }
    }

    // g (y1 + y2 - 2 y1 y2) per pair and column, y = occupancy of the column.
    for (std::size_t s = 0; s < seqs; ++s)
        for (std::size_t n = 0; n < problem.length(s); ++n)
            for (std::size_t c = 0; c < cols; ++c)
                q.add_linear(problem.var_index(s, n, c), g * static_cast<Scalar>(seqs - 1));

    for (std::size_t s1 = 0; s1 < seqs; ++s1) {
        for (std::size_t s2 = s1 + 1; s2 < seqs; ++s2) {
            const auto& w = weights.block(s1, s2);
            for (std::size_t n1 = 0; n1 < problem.length(s1); ++n1) {
                for (std::size_t n2 = 0; n2 < problem.length(s2); ++n2) {
                    const Scalar coeff =
                        static_cast<Scalar>(w(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2))) -
                        2 * g;
                    if (coeff == Scalar(0))
                        continue;
                    for (std::size_t c = 0; c < cols; ++c)
                        q.add_quadratic(problem.var_index(s1, n1, c), problem.var_index(s2, n2, c), coeff);
                }
            }
        }
    }
    return q.build();
}

} // namespace maq
