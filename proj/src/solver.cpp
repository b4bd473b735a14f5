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

#include "maq/solver.hpp"

namespace maq {

std::string_view to_string(Backend backend)
{
    return backend == Backend::Exact ? "exact" : "sa";
}

std::string_view to_string(MoveSet moves)
{
    return moves == MoveSet::ElementShift ? "element-shift" : "single-flip";
}

Feasibility check_feasible(const Assignment& x, const CafProblem& problem)
{
    if (x.size() != static_cast<Eigen::Index>(problem.num_vars()))
        throw Error(ErrorCode::LengthMismatch, "assignment length " + std::to_string(x.size()) +
                                                   " != " + std::to_string(problem.num_vars()));
    Feasibility out;
    const std::size_t cols = problem.columns();
    for (std::size_t s = 0; s < problem.seq_count(); ++s) {
        std::vector<std::size_t> first_col(problem.length(s), cols);
        for (std::size_t n = 0; n < problem.length(s); ++n) {
            std::size_t count = 0;
            for (std::size_t c = 0; c < cols; ++c) {
                if (x(problem.var_index(s, n, c))) {
                    if (count == 0)
                        first_col[n] = c;
                    ++count;
                }
            }
            if (count != 1)
                out.violations.push_back({Violation::Kind::Assignment, s, n,
                                          "element occupies " + std::to_string(count) + " columns"});
        }
        // Every occupied pair (c at n, c' at n+1) with c' <= c counts, as in the energy.
        for (std::size_t n = 0; n + 1 < problem.length(s); ++n) {
            std::size_t clashes = 0;
            for (std::size_t c = 0; c < cols; ++c) {
                if (!x(problem.var_index(s, n, c)))
                    continue;
                for (std::size_t c2 = 0; c2 <= c; ++c2)
                    clashes += x(problem.var_index(s, n + 1, c2));
            }
            if (clashes > 0)
                out.violations.push_back({Violation::Kind::Ordering, s, n,
                                          "element " + std::to_string(n + 1) +
                                              " not strictly right of element " + std::to_string(n)});
        }
    }
    out.feasible = out.violations.empty();
    return out;
}

double feasible_space_size(const CafProblem& problem)
{
    const auto cols = static_cast<double>(problem.columns());
    double total = 1.0;
    for (std::size_t len : problem.lengths())
        total *= std::exp(std::lgamma(cols + 1) - std::lgamma(double(len) + 1) -
                          std::lgamma(cols - double(len) + 1));
    return std::round(total);
}

namespace detail {

std::vector<std::vector<std::size_t>> descending_placements(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    // Start from the lexicographically largest subset {n-k, ..., n-1}.
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = n - k + i;
    while (true) {
        out.push_back(cur);
        // Predecessor: rightmost position that can move left.
        std::size_t i = k;
        while (i > 0) {
            --i;
            const std::size_t floor = i == 0 ? 0 : cur[i - 1] + 1;
            if (cur[i] > floor) {
                --cur[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    cur[j] = n - k + j;
                break;
            }
            if (i == 0)
                return out;
        }
        if (k == 0)
            return out;
    }
}

double max_flip_delta(const Eigen::SparseMatrix<double, Eigen::RowMajor>& sym,
                      const Eigen::VectorXd& linear)
{
    double spread = 0.0;
    for (Eigen::Index i = 0; i < sym.outerSize(); ++i) {
        double row = std::abs(linear(i));
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(sym, i); it; ++it)
            row += std::abs(it.value());
        spread = std::max(spread, row);
    }
    return spread;
}

} // namespace detail

SolveResult solve_exact(const CafProblem& problem, const WeightsMatrix& weights,
                        double enumeration_cap)
{
    return solve_exact(problem, build_caf_qubo<double>(problem, weights), enumeration_cap);
}

std::vector<double> detail::beta_schedule(const SolverConfig& config, double default_beta_min)
{
    const double beta_max = config.beta_max;
    const double beta_min = config.beta_min.value_or(std::min(default_beta_min, beta_max / 10.0));
    if (!(beta_min > 0.0 && beta_min < beta_max))
        throw Error(ErrorCode::InvalidArgument, "need 0 < beta_min < beta_max");
    std::vector<double> schedule(config.sweeps);
    for (std::size_t t = 0; t < config.sweeps; ++t) {
        const double frac = config.sweeps == 1 ? 1.0 : double(t) / double(config.sweeps - 1);
        schedule[t] = beta_min * std::pow(beta_max / beta_min, frac);
    }
    return schedule;
}

} // namespace maq
