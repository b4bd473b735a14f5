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

#include "maq/cluster.hpp"

#include "maq/error.hpp"

#include <cstdio>
#include <algorithm>

namespace maq {

std::size_t DistanceMatrix::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id)
            return i;
    throw Error(ErrorCode::InvalidArgument, "id '" + id + "' not in distance matrix");
}

DistanceMatrix build_distance_matrix(std::span<const KmerSketch> sketches, double cap)
{
    const auto n = static_cast<Eigen::Index>(sketches.size());
    DistanceMatrix dm;
    dm.d = Eigen::MatrixXd::Zero(n, n);
    for (const auto& s : sketches) {
        if (!(s.params == sketches.front().params))
            throw Error(ErrorCode::ParamMismatch, "sketch '" + s.record_id + "' params differ");
        dm.ids.push_back(s.record_id);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double j_est = jaccard_estimate(sketches[i], sketches[j]);
            double dist = mash_distance(j_est, sketches[i].params.k, cap);
            dm.d(i, j) = dist;
            dm.d(j, i) = dist;
        }
    }
    return dm;
}

std::string find_center(std::span<const std::string> members, const DistanceMatrix& dm)
{
    if (members.empty())
        throw Error(ErrorCode::InvalidArgument, "find_center on an empty cluster");

    std::vector<std::size_t> idx;
    idx.reserve(members.size());
    for (const auto& m : members)
        idx.push_back(dm.index_of(m));

    std::size_t best = 0;
    double best_sum = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        double sum = 0.0;
        for (std::size_t b : idx)
            sum += dm.d(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(b));
        if (a == 0 || sum < best_sum || (sum == best_sum && idx[a] < idx[best])) {
            best = a;
            best_sum = sum;
        }
    }
    return members[best];
}

std::vector<Cluster> cluster_sequences(const DistanceMatrix& dm, double cutoff)
{
    // cutoff = 1 joins only zero-distance pairs; anything above 1 isolates every record.
    if (cutoff < 0.0)
        throw Error(ErrorCode::InvalidArgument, "similarity cutoff must be >= 0");

    const std::size_t n = dm.size();
    std::vector<std::size_t> component(n, n);
    std::vector<Cluster> clusters;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (component[seed] != n)
            continue;
        const std::size_t label = clusters.size();
        std::vector<std::size_t> stack{seed};
        std::vector<std::size_t> members;
        component[seed] = label;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (component[v] != n)
                    continue;
                double sim = 1.0 - dm.d(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
                if (sim >= cutoff) {
                    component[v] = label;
                    stack.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Cluster c;
        for (std::size_t m : members)
            c.members.push_back(dm.ids[m]);
        c.center_id = find_center(c.members, dm);
        clusters.push_back(std::move(c));
    }
    return clusters;
}

std::vector<Cluster> enforce_min_size(std::vector<Cluster> clusters, std::size_t min_size,
                                      const DistanceMatrix& dm)
{
    if (min_size < 1)
        throw Error(ErrorCode::InvalidArgument, "min cluster size must be >= 1");

    std::vector<Cluster> out;
    std::vector<std::string> carry;
    for (auto& c : clusters) {
        if (!carry.empty()) {
            c.members.insert(c.members.end(), carry.begin(), carry.end());
            carry.clear();
            c.center_id = find_center(c.members, dm);
        }
        if (c.size() < min_size)
            carry = std::move(c.members);
        else
            out.push_back(std::move(c));
    }
    if (!carry.empty()) {
        if (out.empty()) {
            out.push_back(Cluster{std::move(carry), {}});
        } else {
            auto& last = out.back().members;
            last.insert(last.end(), carry.begin(), carry.end());
        }
        out.back().center_id = find_center(out.back().members, dm);
    }
    return out;
}

ClusterPlan plan_clusters(const DistanceMatrix& dm, double cutoff, std::size_t min_size,
                          const ClusterBackend& backend)
{
    ClusterPlan plan;
    plan.similarity_cutoff = cutoff;
    plan.min_size = min_size;
    plan.clusters = enforce_min_size(backend(dm, cutoff), min_size, dm);
    return plan;
}

std::string distance_matrix_tsv(const DistanceMatrix& dm)
{
    std::string out = "id";
    for (const auto& id : dm.ids)
        out += '\t' + id;
    out += '\n';
    char buf[32];
    for (std::size_t i = 0; i < dm.size(); ++i) {
        out += dm.ids[i];
        for (std::size_t j = 0; j < dm.size(); ++j) {
            std::snprintf(buf, sizeof buf, "\t%.6f",
                          dm.d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace maq
