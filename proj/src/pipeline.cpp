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

#include "maq/pipeline.hpp"

#include "maq/decode.hpp"
#include "maq/error.hpp"
#include "maq/io.hpp"
#include "maq/merge.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace maq {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
auto in_stage(const char* stage, std::chrono::nanoseconds& elapsed, Fn&& fn)
{
    const auto start = Clock::now();
    try {
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            elapsed += Clock::now() - start;
        } else {
            auto out = fn();
            elapsed += Clock::now() - start;
            return out;
        }
    } catch (const Error& e) {
        throw Error(e.code(), std::string(stage) + ": " + e.detail());
    }
}

SketchParams sketch_params(const Dataset& dataset, const RunConfig& config)
{
    auto params = SketchParams::defaults_for(dataset.alphabet());
    if (config.kmer)
        params.k = *config.kmer;
    if (config.sketch_size)
        params.sketch_size = *config.sketch_size;
    params.hash_seed = config.hash_seed;
    return params;
}

RunReport base_report(const Dataset& dataset, const RunConfig& config, bool baseline)
{
    RunReport report;
    const auto params = sketch_params(dataset, config);
    report.baseline = baseline;
    report.backend = std::string(to_string(config.solver.backend));
    report.moves = std::string(to_string(config.solver.moves));
    report.solver_seed = config.solver.seed;
    report.hash_seed = params.hash_seed;
    report.kmer = params.k;
    report.sketch_size = params.sketch_size;
    report.gap_budget = config.gap_budget;
    report.gap_penalty = config.gap_penalty;
    report.similarity_cutoff = config.similarity_cutoff;
    report.min_cluster_size = config.min_cluster_size;
    report.total_sequences = dataset.count();
    report.max_len = dataset.max_len();
    return report;
}

// Aligns one cluster's sequences (plus anchor) into a block.
AlignmentBlock align_cluster(const ClusterInput& input, const Dataset& dataset,
                             const RunConfig& config, ClusterRecord& record, RunResult& result)
{
    if (input.ids.size() == 1) {
        record.solver_called = false;
        return AlignmentBlock{input.ids, input.residues};
    }

    std::vector<std::size_t> lengths;
    for (const auto& r : input.residues)
        lengths.push_back(r.size());
    const CafProblem problem(lengths, config.gap_budget, config.gap_penalty, dataset.max_len());
    const auto weights = build_weights(input.residues);
    const auto qubo = build_caf_qubo<double>(problem, weights);
    if (config.keep_qubo_dumps)
        result.qubo_dumps.push_back(qubo.dump());

    const auto solved = solve(problem, qubo, config.solver);

    record.solver_called = true;
    record.columns = problem.columns();
    record.variable_count = variable_count(problem);
    record.energy = solved.energy;
    record.feasible = solved.feasible;
    record.optimal_count = solved.optimal_count;
    record.alternates_detected = solved.optimal_count > 1;

    return decode_assignment(solved.assignment, problem, input.ids, input.residues);
}

RunResult run_clusters(const Dataset& dataset, const RunConfig& config,
                       const std::vector<Cluster>& clusters, RunResult result)
{
    auto& report = result.report;
    ProgressiveState state;
    for (const auto& cluster : clusters) {
        ClusterRecord record;
        record.members = cluster.members;
        record.center_id = cluster.center_id;
        if (!state.empty())
            record.anchor_id = state.anchor_id;

        const auto input = append_anchor(cluster, state, dataset);
        const auto block = in_stage("solve", report.times.solve, [&] {
            return align_cluster(input, dataset, config, record, result);
        });
        state = in_stage("merge", report.times.merge, [&] {
            return merge_blocks(std::move(state), block, cluster.center_id);
        });

        if (record.solver_called) {
            report.max_single_call_spins = std::max(report.max_single_call_spins, record.variable_count);
            report.sum_spins_all_calls += record.variable_count;
        }
        report.clusters.push_back(std::move(record));
    }

    // Rows back in input order.
    AlignmentBlock ordered;
    for (const auto& rec : dataset.records()) {
        ordered.ids.push_back(rec.id);
        ordered.rows.push_back(state.merged.rows[state.merged.index_of(rec.id)]);
    }
    for (std::size_t i = 0; i < ordered.size(); ++i)
        if (degap(ordered.rows[i]) != dataset[i].residues)
            throw Error(ErrorCode::AnchorMismatch,
                        "merge: row '" + ordered.ids[i] + "' lost residues");

    result.score = in_stage("score", report.times.score, [&] { return score_alignment(ordered); });
    report.score_total = result.score.total;
    report.alignment_width = ordered.width();
    result.alignment = std::move(ordered);
    return result;
}

} // namespace

void RunConfig::validate() const
{
    auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); };
    if (!(gap_penalty >= 0.0 && gap_penalty < 1.0))
        bad("--gap-penalty must lie in [0, 1)");
    if (!(similarity_cutoff >= 0.0) || !std::isfinite(similarity_cutoff))
        bad("--cutoff must be >= 0");
    if (min_cluster_size < 1)
        bad("--min-cluster-size must be >= 1");
    if (kmer && *kmer < 1)
        bad("--kmer must be >= 1");
    if (sketch_size && *sketch_size < 1)
        bad("--sketch-size must be >= 1");
    if (solver.sweeps < 1)
        bad("--sweeps must be >= 1");
    if (solver.restarts < 1)
        bad("--restarts must be >= 1");
    if (solver.beta_min && !(*solver.beta_min > 0.0 && *solver.beta_min < solver.beta_max))
        bad("need 0 < beta_min < beta_max");
    if (!(solver.beta_max > 0.0))
        bad("beta_max must be > 0");
}

RunResult run_pipeline(const Dataset& dataset, const RunConfig& config)
{
    config.validate();
    RunResult result;
    result.report = base_report(dataset, config, false);
    auto& times = result.report.times;

    std::vector<Cluster> clusters;
    if (dataset.count() == 1) {
        clusters.push_back(Cluster{{dataset[0].id}, dataset[0].id});
    } else {
        const auto params = sketch_params(dataset, config);
        auto sketches = in_stage("sketch", times.sketch, [&] {
            std::vector<KmerSketch> out;
            for (const auto& rec : dataset.records())
                out.push_back(build_sketch(rec, params, dataset.alphabet()));
            return out;
        });
        auto plan = in_stage("cluster", times.cluster, [&] {
            auto dm = build_distance_matrix(sketches);
            auto p = plan_clusters(dm, config.similarity_cutoff, config.min_cluster_size);
            result.distances = std::move(dm);
            return p;
        });
        clusters = std::move(plan.clusters);
    }
    return run_clusters(dataset, config, clusters, std::move(result));
}

RunResult run_pipeline(const RunConfig& config)
{
    std::chrono::nanoseconds parse_time{0};
    auto dataset = in_stage("parse", parse_time, [&] { return parse_fasta(read_file(config.input)); });
    auto result = run_pipeline(dataset, config);
    result.report.times.parse = parse_time;
    return result;
}

RunResult run_baseline_unclustered(const Dataset& dataset, const RunConfig& config)
{
    config.validate();
    RunResult result;
    result.report = base_report(dataset, config, true);
    Cluster all;
    for (const auto& rec : dataset.records())
        all.members.push_back(rec.id);
    all.center_id = all.members.front();
    return run_clusters(dataset, config, {all}, std::move(result));
}

RunResult run_baseline_unclustered(const RunConfig& config)
{
    std::chrono::nanoseconds parse_time{0};
    auto dataset = in_stage("parse", parse_time, [&] { return parse_fasta(read_file(config.input)); });
    auto result = run_baseline_unclustered(dataset, config);
    result.report.times.parse = parse_time;
    return result;
}

std::string report_json(const RunReport& report, bool include_timings)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["mode"] = report.baseline ? "baseline_unclustered" : "clustered";
    j["backend"] = report.backend;
    if (report.backend == "sa")
        j["moves"] = report.moves;
    j["solver_seed"] = report.solver_seed;
    j["hash_seed"] = report.hash_seed;
    j["kmer"] = report.kmer;
    j["sketch_size"] = report.sketch_size;
    j["gap_budget"] = report.gap_budget;
    j["gap_penalty"] = report.gap_penalty;
    j["similarity_cutoff"] = report.similarity_cutoff;
    j["min_cluster_size"] = report.min_cluster_size;
    j["total_sequences"] = report.total_sequences;
    j["max_len"] = report.max_len;

    ordered_json clusters = ordered_json::array();
    for (const auto& c : report.clusters) {
        ordered_json e;
        e["members"] = c.members;
        e["center_id"] = c.center_id;
        e["anchor_id"] = c.anchor_id ? ordered_json(*c.anchor_id) : ordered_json(nullptr);
        e["solver_called"] = c.solver_called;
        e["columns"] = c.columns;
        e["variable_count"] = c.variable_count;
        e["energy"] = c.energy;
        e["feasible"] = c.feasible;
        e["optimal_count"] = c.optimal_count;
        e["alternates_detected"] = c.alternates_detected;
        clusters.push_back(std::move(e));
    }
    j["clusters"] = std::move(clusters);
    j["max_single_call_spins"] = report.max_single_call_spins;
    j["sum_spins_all_calls"] = report.sum_spins_all_calls;
    j["alignment_width"] = report.alignment_width;
    j["score_total"] = report.score_total;

    if (include_timings) {
        auto ms = [](std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; };
        ordered_json t;
        t["parse_ms"] = ms(report.times.parse);
        t["sketch_ms"] = ms(report.times.sketch);
        t["cluster_ms"] = ms(report.times.cluster);
        t["solve_ms"] = ms(report.times.solve);
        t["merge_ms"] = ms(report.times.merge);
        t["score_ms"] = ms(report.times.score);
        j["wall_times"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

} // namespace maq
