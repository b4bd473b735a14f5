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

// maq: progressive multiple sequence alignment over CAF energy minimisation.

#include "maq/cluster.hpp"
#include "maq/error.hpp"
#include "maq/io.hpp"
#include "maq/pipeline.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct Outputs {
    std::vector<std::string> emit{"fasta"};
    std::string prefix;
    std::string distance_tsv;
    std::string qubo_dir;
    bool timings = false;
};

void emit_all(const maq::RunResult& result, const Outputs& out)
{
    const std::map<std::string, std::string> suffix = {
        {"fasta", ".aln.fasta"},
        {"table", ".table.txt"},
        {"scores", ".scores.tsv"},
        {"report", ".report.json"},
    };
    for (const auto& kind : out.emit) {
        std::string body;
        if (kind == "fasta")
            body = maq::block_to_fasta(result.alignment);
        else if (kind == "table")
            body = maq::block_to_table(result.alignment);
        else if (kind == "scores")
            body = maq::score_report_tsv(result.score);
        else
            body = maq::report_json(result.report, out.timings);

        if (out.prefix.empty())
            std::cout << body;
        else
            maq::write_file_atomic(out.prefix + suffix.at(kind), body);
    }

    if (!out.distance_tsv.empty() && result.distances)
        maq::write_file_atomic(out.distance_tsv, maq::distance_matrix_tsv(*result.distances));
    if (!out.qubo_dir.empty()) {
        std::filesystem::create_directories(out.qubo_dir);
        for (std::size_t i = 0; i < result.qubo_dumps.size(); ++i)
            maq::write_file_atomic(std::filesystem::path(out.qubo_dir) /
                                       ("call" + std::to_string(i) + ".qubo.txt"),
                                   result.qubo_dumps[i]);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MAQ: cluster, align each cluster by CAF energy minimisation, merge via anchors"};

    maq::RunConfig config;
    Outputs out;
    bool baseline = false;
    std::string backend = "sa";
    std::string moves = "element-shift";

    app.add_option("--input", config.input, "FASTA file")->required()->check(CLI::ExistingFile);
    app.add_option("--gaps", config.gap_budget, "Gap budget G (C = N + G)")->capture_default_str();
    app.add_option("--gap-penalty", config.gap_penalty, "Residue-vs-gap penalty g in [0,1)")
        ->capture_default_str();
    app.add_option("--cutoff", config.similarity_cutoff, "Similarity cutoff (edge iff 1 - d >= cutoff)")
        ->capture_default_str();
    app.add_option("--min-cluster-size", config.min_cluster_size, "Minimum cluster size")
        ->capture_default_str();
    app.add_option("--kmer", config.kmer, "k-mer length (default: 4 protein, 16 nucleotide)");
    app.add_option("--sketch-size", config.sketch_size, "MinHash sketch size (default: 64 protein, 1000 nucleotide)");
    app.add_option("--hash-seed", config.hash_seed, "Sketch hash seed")->capture_default_str();
    app.add_option("--seed", config.solver.seed, "Solver seed")->capture_default_str();
    app.add_option("--backend", backend, "Solver backend")
        ->check(CLI::IsMember({"exact", "sa"}))
        ->capture_default_str();
    app.add_option("--sweeps", config.solver.sweeps, "Annealing sweeps per restart")->capture_default_str();
    app.add_option("--restarts", config.solver.restarts, "Annealing restarts")->capture_default_str();
    app.add_option("--moves", moves, "Annealer moves on alignment models")
        ->check(CLI::IsMember({"element-shift", "single-flip"}))
        ->capture_default_str();
    app.add_option("--beta-min", config.solver.beta_min,
                   "Initial inverse temperature (default: 0.1 for element shifts, derived from the "
                   "model for single flips)");
    app.add_option("--beta-max", config.solver.beta_max, "Final inverse temperature")->capture_default_str();
    app.add_option("--feasibility-retries", config.solver.feasibility_retries,
                   "Annealer reruns when the best sample is infeasible")
        ->capture_default_str();
    app.add_option("--enumeration-cap", config.solver.enumeration_cap,
                   "Exact backend limit on feasible assignments")
        ->capture_default_str();
    app.add_flag("--baseline", baseline, "Align every sequence in one call, no clustering");
    app.add_option("--emit", out.emit, "Outputs: fasta, table, scores, report")
        ->delimiter(',')
        ->check(CLI::IsMember({"fasta", "table", "scores", "report"}))
        ->capture_default_str();
    app.add_option("--output", out.prefix, "Output path prefix (default: stdout)");
    app.add_option("--distance-tsv", out.distance_tsv, "Write the distance matrix as TSV");
    app.add_option("--dump-qubo", out.qubo_dir, "Directory for per-call QUBO text dumps");
    app.add_flag("--report-timings", out.timings, "Include wall times in the run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    config.solver.backend = backend == "exact" ? maq::Backend::Exact : maq::Backend::SimulatedAnnealing;
    config.solver.moves = moves == "single-flip" ? maq::MoveSet::SingleFlip : maq::MoveSet::ElementShift;
    config.keep_qubo_dumps = !out.qubo_dir.empty();

    try {
        auto result = baseline ? maq::run_baseline_unclustered(config) : maq::run_pipeline(config);
        emit_all(result, out);
    } catch (const maq::Error& e) {
        std::cerr << "maq: " << e.what() << '\n';
        return maq::exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "maq: internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
