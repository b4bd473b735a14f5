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

#include "maq/seqio.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maq {

struct SketchParams {
    std::size_t k = 4;
    std::size_t sketch_size = 64;
    std::uint64_t hash_seed = 42;

    bool operator==(const SketchParams&) const = default;

    /// k=4/s=64 for protein, k=16/s=1000 for nucleotide.
    static SketchParams defaults_for(Alphabet alphabet);
};

/// Bottom-s MinHash sketch of the distinct k-mers of one sequence.
struct KmerSketch {
    std::string record_id;
    SketchParams params;
    std::vector<std::uint64_t> min_hashes; // strictly increasing
    std::size_t kmer_count = 0;            // distinct k-mers seen
};

inline constexpr double kDistanceCap = 1.0;

/// Seeded 64-bit hash of a k-mer.
std::uint64_t hash_kmer(std::string_view kmer, std::uint64_t seed) noexcept;

KmerSketch build_sketch(const SequenceRecord& record, const SketchParams& params,
                        Alphabet alphabet = Alphabet::Protein);

/// Mash's bottom-s Jaccard estimator over the merged sketches.
double jaccard_estimate(const KmerSketch& a, const KmerSketch& b);

/// Mash distance -(1/k) ln(2j/(1+j)), clamped to [0, cap]; j = 0 maps to cap.
double mash_distance(double jaccard, std::size_t k, double cap = kDistanceCap);

} // namespace maq
