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

#include "maq/sketch.hpp"

#include "maq/error.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace maq {

SketchParams SketchParams::defaults_for(Alphabet alphabet)
{
    if (alphabet == Alphabet::Nucleotide)
        return {16, 1000, 42};
    return {4, 64, 42};
}

std::uint64_t hash_kmer(std::string_view kmer, std::uint64_t seed) noexcept
{
    // FNV-1a over the bytes, then the murmur3 64-bit finalizer.
    std::uint64_t h = 0xcbf29ce484222325ULL ^ (seed * 0x9e3779b97f4a7c15ULL);
    for (unsigned char c : kmer) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

KmerSketch build_sketch(const SequenceRecord& record, const SketchParams& params,
                        Alphabet alphabet)
{
    if (params.k < 1 || params.sketch_size < 1)
        throw Error(ErrorCode::InvalidArgument, "sketch needs k >= 1 and sketch_size >= 1");
    const std::string residues = canonical_residues(record, alphabet);
    if (residues.size() < params.k)
        throw Error(ErrorCode::SequenceTooShort,
                    "record '" + record.id + "' has length " + std::to_string(residues.size()) +
                        " < k=" + std::to_string(params.k));

    std::unordered_set<std::string_view> distinct;
    std::vector<std::uint64_t> hashes;
    const std::string_view view(residues);
    for (std::size_t i = 0; i + params.k <= view.size(); ++i) {
        auto kmer = view.substr(i, params.k);
        if (distinct.insert(kmer).second)
            hashes.push_back(hash_kmer(kmer, params.hash_seed));
    }

    std::sort(hashes.begin(), hashes.end());
    hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
    if (hashes.size() > params.sketch_size)
        hashes.resize(params.sketch_size);

    return KmerSketch{record.id, params, std::move(hashes), distinct.size()};
}

double jaccard_estimate(const KmerSketch& a, const KmerSketch& b)
{
    if (!(a.params == b.params))
        throw Error(ErrorCode::ParamMismatch,
                    "sketches '" + a.record_id + "' and '" + b.record_id + "' differ in params");

    const std::size_t limit = a.params.sketch_size;
    std::size_t taken = 0;
    std::size_t shared = 0;
    auto ia = a.min_hashes.begin();
    auto ib = b.min_hashes.begin();
    while (taken < limit && (ia != a.min_hashes.end() || ib != b.min_hashes.end())) {
        if (ib == b.min_hashes.end() || (ia != a.min_hashes.end() && *ia < *ib)) {
            ++ia;
        } else if (ia == a.min_hashes.end() || *ib < *ia) {
            ++ib;
        } else {
            ++shared;
            ++ia;
            ++ib;
        }
        ++taken;
    }
    if (taken == 0)
        return 0.0;
    return static_cast<double>(shared) / static_cast<double>(taken);
}

double mash_distance(double jaccard, std::size_t k, double cap)
{
    if (jaccard <= 0.0)
        return cap;
    if (jaccard >= 1.0)
        return 0.0;
    double d = -std::log(2.0 * jaccard / (1.0 + jaccard)) / static_cast<double>(k);
    return std::clamp(d, 0.0, cap);
}

} // namespace maq
