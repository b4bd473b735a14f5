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
#include "maq/score.hpp"
#include "maq/seqio.hpp"
#include "maq/sketch.hpp"
#include "maq/solver.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace maq {

struct RunConfig {
    std::filesystem::path input;
    std::size_t gap_budget = 1;
    double gap_penalty = 0.5;
    double similarity_cutoff = 0.5;
    std::size_t min_cluster_size = 2;
    std::optional<std::size_t> kmer;        // alphabet default when unset
    std::optional<std::size_t> sketch_size; // alphabet default when unset
    std::uint64_t hash_seed = 42;
    SolverConfig solver;
    bool keep_qubo_dumps = false;

    /// Throws InvalidArgument for out-of-range values.
    void validate() const;
};

struct ClusterRecord {
    std::vector<std::string> members;
    std::string center_id;
    std::optional<std::string> anchor_id;
    bool solver_called = false;
    std::size_t columns = 0;
    std::size_t variable_count = 0; // C * sum of lengths, 0 when no solver call
    double energy = 0.0;
    bool feasible = true;
    std::size_t optimal_count = 0;
    bool alternates_detected = false;
};

struct StageTimes {
    std::chrono::nanoseconds parse{0}, sketch{0}, cluster{0}, solve{0}, merge{0}, score{0};
};

struct RunReport {
    bool baseline = false;
    std::string backend;
    std::string moves;
    std::uint64_t solver_seed = 0;
    std::uint64_t hash_seed = 0;
    std::size_t kmer = 0;
    std::size_t sketch_size = 0;
    std::size_t gap_budget = 0;
    double gap_penalty = 0.0;
    double similarity_cutoff = 0.0;
    std::size_t min_cluster_size = 0;
    std::size_t total_sequences = 0;
    std::size_t max_len = 0;
    std::vector<ClusterRecord> clusters;
    std::size_t max_single_call_spins = 0;
    std::size_t sum_spins_all_calls = 0;
    std::int64_t score_total = 0;
    std::size_t alignment_width = 0;
    StageTimes times;
};

struct RunResult {
    AlignmentBlock alignment; // rows in input order
    ScoreReport score;
    RunReport report;
    std::optional<DistanceMatrix> distances;
    std::vector<std::string> qubo_dumps; // one per solver call, when requested
};

/// parse -> sketch -> cluster -> per cluster {anchor, weights, qubo, solve,
/// decode} -> merge -> score.
RunResult run_pipeline(const Dataset& dataset, const RunConfig& config);
RunResult run_pipeline(const RunConfig& config);

/// Same solve with clustering bypassed: one CAF problem over every sequence.
RunResult run_baseline_unclustered(const Dataset& dataset, const RunConfig& config);
RunResult run_baseline_unclustered(const RunConfig& config);

/// Run report as JSON with a fixed key order; wall times only on request.
std::string report_json(const RunReport& report, bool include_timings = false);

} // namespace maq
