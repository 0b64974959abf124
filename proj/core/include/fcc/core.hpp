#pragma once

#include "fcc/instance.hpp"

namespace fcc {

/// Edit distance to the cluster graph: edges cut between clusters plus
/// non-edges inside clusters. Throws ValidationError on an invalid partition.
int clustering_cost(const ColoredInstance& instance, const Clustering& clustering);

/// Same value computed as |E| + a - 2b, where a counts within-cluster vertex
/// pairs and b within-cluster edges.
int cost_from_pair_counts(const ColoredInstance& instance, const Clustering& clustering);

/// True iff every cluster's color counts are an integer multiple of the
/// fairlet vector.
bool is_fair(const Clustering& clustering, const FairletVector& fairlet,
             const std::vector<int>& color);

/// Cap on cluster sizes that some optimal solution respects:
/// max(24 * width_upper_bound, fairlet_size). Monotone in the width bound,
/// so any upper bound on the treewidth is sound.
int max_cluster_size_bound(int width_upper_bound, int fairlet_size);

}  // namespace fcc
