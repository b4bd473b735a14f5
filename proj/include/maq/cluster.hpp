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

#include "maq/sketch.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace maq {

/// Symmetric pairwise Mash distances with a zero diagonal.
struct DistanceMatrix {
    std::vector<std::string> ids;
    Eigen::MatrixXd d;

    std::size_t size() const noexcept { return ids.size(); }
    std::size_t index_of(const std::string& id) const;
};

struct Cluster {
    std::vector<std::string> members; // input order unless merged by enforce_min_size
    std::string center_id;

    std::size_t size() const noexcept { return members.size(); }
    bool operator==(const Cluster&) const = default;
};

struct ClusterPlan {
    std::vector<Cluster> clusters;
    double similarity_cutoff = 0.5;
    std::size_t min_size = 2;
};

DistanceMatrix build_distance_matrix(std::span<const KmerSketch> sketches,
                                     double cap = kDistanceCap);

/// Member with the smallest summed distance to the other members; ties go to
/// the earliest input index.
std::string find_center(std::span<const std::string> members, const DistanceMatrix& dm);

/// Connected components of the graph with an edge wherever 1 - d >= cutoff.
/// Clusters are ordered by their smallest member index.
std::vector<Cluster> cluster_sequences(const DistanceMatrix& dm, double cutoff);

/// Folds clusters smaller than min_size into the next cluster (or the previous
/// one, for a trailing cluster) and recomputes centers.
std::vector<Cluster> enforce_min_size(std::vector<Cluster> clusters, std::size_t min_size,
                                      const DistanceMatrix& dm);

/// Pluggable clustering step; the default is threshold-graph components.
using ClusterBackend = std::function<std::vector<Cluster>(const DistanceMatrix&, double)>;

ClusterPlan plan_clusters(const DistanceMatrix& dm, double cutoff, std::size_t min_size,
                          const ClusterBackend& backend = cluster_sequences);

/// Tab-separated matrix, ids as header row and first column, 6 decimals.
std::string distance_matrix_tsv(const DistanceMatrix& dm);

} // namespace maq
