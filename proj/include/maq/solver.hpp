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

#include "maq/qubo.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace maq {

enum class Backend { Exact, SimulatedAnnealing };

std::string_view to_string(Backend backend);

/// Annealer moves on CAF models.
enum class MoveSet { ElementShift, SingleFlip };

std::string_view to_string(MoveSet moves);

struct SolverConfig {
    static constexpr double kDefaultBetaMin = 0.1;

    Backend backend = Backend::SimulatedAnnealing;
    MoveSet moves = MoveSet::ElementShift;
    std::uint64_t seed = 1;
    std::size_t sweeps = 2000;
    std::size_t restarts = 16;
    /// Unset: kDefaultBetaMin for element shifts; for single flips,
    /// ln(2) / (largest possible single-flip energy change).
    std::optional<double> beta_min;
    double beta_max = 10.0;
    std::size_t feasibility_retries = 4;
    double enumeration_cap = 1e6;
};

struct SolveResult {
    Assignment assignment;
    double energy = 0.0;
    bool feasible = false;
    std::size_t restarts_used = 0;
    std::chrono::nanoseconds wall_time{0};
    /// Exact backend: number of assignments at the minimum energy.
    /// Annealer: number of distinct chains' final states at the minimum.
    std::size_t optimal_count = 0;
};

struct Violation {
    enum class Kind { Assignment, Ordering };
    Kind kind;
    std::size_t sequence;
    std::size_t element; // for Ordering, the left element of the pair
    std::string detail;
};

struct Feasibility {
    bool feasible = true;
    std::vector<Violation> violations;
};

/// Residuals of the one-column and ordering constraints.
Feasibility check_feasible(const Assignment& x, const CafProblem& problem);

/// Number of feasible assignments, prod_s binom(C, N_s), as a double.
double feasible_space_size(const CafProblem& problem);

namespace detail {

// Column subsets of size k out of n in descending lexicographic order, which
// is ascending order of the corresponding one-hot bit blocks.
std::vector<std::vector<std::size_t>> descending_placements(std::size_t n, std::size_t k);

double max_flip_delta(const Eigen::SparseMatrix<double, Eigen::RowMajor>& sym,
                      const Eigen::VectorXd& linear);

} // namespace detail

/// Enumerates every feasible assignment and returns the minimum-energy one;
/// among equal energies, the lexicographically smallest bit vector.
template <typename Scalar>
SolveResult solve_exact(const CafProblem& problem, const Qubo<Scalar>& qubo,
                        double enumeration_cap = 1e6)
{
    const auto start = std::chrono::steady_clock::now();
    if (qubo.num_vars() != static_cast<Eigen::Index>(problem.num_vars()))
        throw Error(ErrorCode::LengthMismatch, "qubo does not match problem");
    const double space = feasible_space_size(problem);
    if (space > enumeration_cap)
        throw Error(ErrorCode::TooLarge, "feasible space " + std::to_string(space) +
                                             " exceeds enumeration cap " +
                                             std::to_string(enumeration_cap));

    const std::size_t seqs = problem.seq_count();
    const std::size_t cols = problem.columns();

    // Dense lookup for small models; sparse binary search otherwise.
    const auto sym = qubo.symmetric();
    const bool dense = qubo.num_vars() <= 2048;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> q;
    if (dense)
        q = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(sym);
    auto coeff = [&](Eigen::Index i, Eigen::Index j) -> Scalar {
        return dense ? q(i, j) : sym.coeff(i, j);
    };

    struct Placement {
        std::vector<Eigen::Index> vars;
        Scalar self;
    };
    std::vector<std::vector<Placement>> placements(seqs);
    for (std::size_t s = 0; s < seqs; ++s) {
        for (auto& cols_used : detail::descending_placements(cols, problem.length(s))) {
            Placement p;
            for (std::size_t n = 0; n < cols_used.size(); ++n)
                p.vars.push_back(problem.var_index(s, n, cols_used[n]));
            p.self = Scalar(0);
            for (std::size_t i = 0; i < p.vars.size(); ++i) {
                p.self += qubo.linear()(p.vars[i]);
                for (std::size_t j = i + 1; j < p.vars.size(); ++j)
                    p.self += coeff(p.vars[i], p.vars[j]);
            }
            placements[s].push_back(std::move(p));
        }
    }

    std::vector<std::size_t> choice(seqs, 0);
    std::vector<std::size_t> best_choice;
    Scalar best = std::numeric_limits<Scalar>::infinity();
    std::size_t optimal_count = 0;

    auto tolerance = [](Scalar ref) {
        return Scalar(1e-9) * std::max(Scalar(1), std::abs(ref));
    };

    auto recurse = [&](auto&& self, std::size_t s, Scalar partial) -> void {
        if (s == seqs) {
            const Scalar e = partial + qubo.offset();
            if (best_choice.empty() || e < best - tolerance(best)) {
                best = e;
                best_choice = choice;
                optimal_count = 1;
            } else if (std::abs(e - best) <= tolerance(best)) {
                ++optimal_count;
            }
            return;
        }
        for (std::size_t k = 0; k < placements[s].size(); ++k) {
            const auto& p = placements[s][k];
            Scalar e = partial + p.self;
            for (std::size_t t = 0; t < s; ++t)
                for (Eigen::Index vi : p.vars)
                    for (Eigen::Index vj : placements[t][choice[t]].vars)
                        e += coeff(vi, vj);
            choice[s] = k;
            self(self, s + 1, e);
        }
    };
    recurse(recurse, 0, Scalar(0));

    SolveResult result;
    result.assignment = Assignment::Zero(qubo.num_vars());
    for (std::size_t s = 0; s < seqs; ++s)
        for (Eigen::Index v : placements[s][best_choice[s]].vars)
            result.assignment(v) = 1;
    result.energy = static_cast<double>(qubo.energy(result.assignment));
    result.feasible = true;
    result.restarts_used = 0;
    result.optimal_count = optimal_count;
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

/// Brute force over the CAF problem with the default penalties.
SolveResult solve_exact(const CafProblem& problem, const WeightsMatrix& weights,
                        double enumeration_cap = 1e6);

namespace detail {

using SparseRows = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// Local fields h = linear + Q x of the symmetric model, kept current under flips.
struct FieldState {
    const SparseRows& sym;
    Assignment& x;
    Eigen::VectorXd field;

    FieldState(const SparseRows& q, const Eigen::VectorXd& linear, Assignment& bits)
        : sym(q), x(bits), field(linear + q * bits.cast<double>())
    {
    }

    double flip_delta(Eigen::Index i) const { return x(i) ? -field(i) : field(i); }

    // Energy change of clearing `from` and setting `to`.
    double move_delta(Eigen::Index from, Eigen::Index to) const
    {
        return field(to) - sym.coeff(to, from) - field(from);
    }

    void flip(Eigen::Index i)
    {
        x(i) ^= 1;
        const double sign = x(i) ? 1.0 : -1.0;
        for (SparseRows::InnerIterator it(sym, i); it; ++it)
            field(it.col()) += sign * it.value();
    }
};

std::vector<double> beta_schedule(const SolverConfig& config, double default_beta_min);

// Restart and retry loop shared by both move sets. `chain(rng, x)` runs one
// chain from scratch and leaves its final state in x.
template <typename Scalar, typename Chain, typename FeasiblePredicate>
SolveResult run_restarts(const Qubo<Scalar>& qubo, const SolverConfig& config, Chain&& chain,
                         FeasiblePredicate&& is_feasible)
{
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    Assignment x(qubo.num_vars());

    for (std::size_t attempt = 0; attempt <= config.feasibility_retries; ++attempt) {
        std::vector<Assignment> optima;
        Assignment best;
        double best_energy = std::numeric_limits<double>::infinity();

        for (std::size_t r = 0; r < config.restarts; ++r) {
            std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                              static_cast<std::uint32_t>(config.seed >> 32),
                              static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(seq);
            chain(rng, x);

            ++result.restarts_used;
            const double e = static_cast<double>(qubo.energy(x));
            const double tol = 1e-9 * std::max(1.0, std::abs(best_energy));
            if (optima.empty() || e < best_energy - tol) {
                best_energy = e;
                best = x;
                optima.assign(1, x);
            } else if (std::abs(e - best_energy) <= tol &&
                       std::find(optima.begin(), optima.end(), x) == optima.end()) {
                optima.push_back(x);
            }
        }

        result.assignment = best;
        result.energy = best_energy;
        result.optimal_count = optima.size();
        result.feasible = is_feasible(best);
        if (result.feasible)
            break;
    }
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

inline void check_sa_config(const SolverConfig& config, Eigen::Index num_vars)
{
    if (num_vars == 0)
        throw Error(ErrorCode::InvalidArgument, "empty qubo");
    if (config.sweeps < 1 || config.restarts < 1)
        throw Error(ErrorCode::InvalidArgument, "sweeps and restarts must be >= 1");
}

} // namespace detail

/// Simulated annealing with single-bit Metropolis updates under a geometric
/// beta ramp, from a random bit vector, ending in a zero-temperature descent.
/// Restart r of attempt a is seeded from (seed, a, r), so results over a
/// prefix of restarts never depend on the total restart count.
/// `is_feasible` triggers reruns on fresh attempts until a feasible best
/// sample appears or `feasibility_retries` runs out.
template <typename Scalar, typename FeasiblePredicate>
SolveResult solve_sa(const Qubo<Scalar>& qubo, const SolverConfig& config,
                     FeasiblePredicate&& is_feasible)
{
    detail::check_sa_config(config, qubo.num_vars());
    const Eigen::Index n = qubo.num_vars();
    const detail::SparseRows sym = qubo.symmetric().template cast<double>();
    const Eigen::VectorXd linear = qubo.linear().template cast<double>();
    const double spread = detail::max_flip_delta(sym, linear);
    const auto schedule = detail::beta_schedule(
        config, spread > 0.0 ? std::log(2.0) / spread : config.beta_max / 100.0);

    auto chain = [&](std::mt19937_64& rng, Assignment& x) {
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        for (Eigen::Index i = 0; i < n; ++i)
            x(i) = static_cast<std::uint8_t>(rng() >> 63);
        detail::FieldState st(sym, linear, x);
        for (double beta : schedule) {
            for (Eigen::Index i = 0; i < n; ++i) {
                const double delta = st.flip_delta(i);
                if (delta <= 0.0 || uniform(rng) < std::exp(-beta * delta))
                    st.flip(i);
            }
        }
        for (bool improved = true; improved;) {
            improved = false;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (st.flip_delta(i) < -1e-12) {
                    st.flip(i);
                    improved = true;
                }
            }
        }
    };
    return detail::run_restarts(qubo, config, chain, std::forward<FeasiblePredicate>(is_feasible));
}

/// Unconstrained annealing: every sample counts as feasible.
template <typename Scalar>
SolveResult solve_sa(const Qubo<Scalar>& qubo, const SolverConfig& config)
{
    return solve_sa(qubo, config, [](const Assignment&) { return true; });
}

/// Annealing on a CAF model. With MoveSet::SingleFlip this is the generic
/// annealer plus a constraint check, and throws NeverFeasible when every
/// retry ends on a violation. With MoveSet::ElementShift each chain starts
/// from a random feasible placement and only proposes moving one element to
/// another column strictly between its neighbours, so every sample is
/// feasible; energy changes still come from the QUBO.
template <typename Scalar>
SolveResult solve_sa(const CafProblem& problem, const Qubo<Scalar>& qubo, const SolverConfig& config)
{
    if (qubo.num_vars() != static_cast<Eigen::Index>(problem.num_vars()))
        throw Error(ErrorCode::LengthMismatch, "qubo does not match problem");
    auto feasible = [&](const Assignment& x) { return check_feasible(x, problem).feasible; };

    if (config.moves == MoveSet::SingleFlip) {
        auto result = solve_sa(qubo, config, feasible);
        if (!result.feasible)
            throw Error(ErrorCode::NeverFeasible,
                        "annealer found no feasible sample after " +
                            std::to_string(config.feasibility_retries + 1) +
                            " attempts; check penalties or schedule");
        return result;
    }

    detail::check_sa_config(config, qubo.num_vars());
    const detail::SparseRows sym = qubo.symmetric().template cast<double>();
    const Eigen::VectorXd linear = qubo.linear().template cast<double>();
    const auto schedule = detail::beta_schedule(config, SolverConfig::kDefaultBetaMin);
    const auto cols = static_cast<std::ptrdiff_t>(problem.columns());

    // Element e of sequence s spans [first[s], first[s] + length(s)).
    std::vector<std::size_t> first(problem.seq_count() + 1, 0);
    for (std::size_t s = 0; s < problem.seq_count(); ++s)
        first[s + 1] = first[s] + problem.length(s);
    std::vector<std::ptrdiff_t> column(problem.total_elements());
    auto var = [&](std::size_t e, std::ptrdiff_t c) {
        return static_cast<Eigen::Index>(e * problem.columns() + static_cast<std::size_t>(c));
    };
    // Open interval of columns element e may take, given its neighbours.
    auto bounds = [&](std::size_t s, std::size_t e) {
        const std::ptrdiff_t lo = e == first[s] ? 0 : column[e - 1] + 1;
        const std::ptrdiff_t hi = e + 1 == first[s + 1] ? cols - 1 : column[e + 1] - 1;
        return std::pair{lo, hi};
    };

    auto chain = [&](std::mt19937_64& rng, Assignment& x) {
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        x.setZero();
        std::vector<std::ptrdiff_t> all(static_cast<std::size_t>(cols));
        for (std::ptrdiff_t c = 0; c < cols; ++c)
            all[static_cast<std::size_t>(c)] = c;
        for (std::size_t s = 0; s < problem.seq_count(); ++s) {
            std::sample(all.begin(), all.end(), column.begin() + static_cast<std::ptrdiff_t>(first[s]),
                        static_cast<std::ptrdiff_t>(problem.length(s)), rng);
            for (std::size_t e = first[s]; e < first[s + 1]; ++e)
                x(var(e, column[e])) = 1;
        }
        detail::FieldState st(sym, linear, x);
        auto move = [&](std::size_t e, std::ptrdiff_t to) {
            st.flip(var(e, column[e]));
            st.flip(var(e, to));
            column[e] = to;
        };

        for (double beta : schedule) {
            for (std::size_t s = 0; s < problem.seq_count(); ++s) {
                for (std::size_t e = first[s]; e < first[s + 1]; ++e) {
                    const auto [lo, hi] = bounds(s, e);
                    if (hi <= lo)
                        continue;
                    std::ptrdiff_t to = lo + static_cast<std::ptrdiff_t>(rng() % static_cast<std::uint64_t>(hi - lo));
                    if (to >= column[e])
                        ++to;
                    const double delta = st.move_delta(var(e, column[e]), var(e, to));
                    if (delta <= 0.0 || uniform(rng) < std::exp(-beta * delta))
                        move(e, to);
                }
            }
        }
        // Steepest single-element descent.
        for (bool improved = true; improved;) {
            improved = false;
            for (std::size_t s = 0; s < problem.seq_count(); ++s) {
                for (std::size_t e = first[s]; e < first[s + 1]; ++e) {
                    const auto [lo, hi] = bounds(s, e);
                    std::ptrdiff_t best_to = column[e];
                    double best_delta = -1e-12;
                    for (std::ptrdiff_t to = lo; to <= hi; ++to) {
                        if (to == column[e])
                            continue;
                        const double delta = st.move_delta(var(e, column[e]), var(e, to));
                        if (delta < best_delta) {
                            best_delta = delta;
                            best_to = to;
                        }
                    }
                    if (best_to != column[e]) {
                        move(e, best_to);
                        improved = true;
                    }
                }
            }
        }
    };
    auto result = detail::run_restarts(qubo, config, chain, feasible);
    if (!result.feasible)
        throw Error(ErrorCode::Internal, "element-shift annealer produced an infeasible sample");
    return result;
}

/// Dispatches on config.backend.
template <typename Scalar>
SolveResult solve(const CafProblem& problem, const Qubo<Scalar>& qubo, const SolverConfig& config)
{
    if (config.backend == Backend::Exact)
        return solve_exact(problem, qubo, config.enumeration_cap);
    return solve_sa(problem, qubo, config);
}

} // namespace maq
