#include "fcc/core.hpp"

#include <algorithm>

namespace fcc {

namespace {

std::vector<int> cluster_index(const ColoredInstance& instance, const Clustering& c) {
    validate_partition(instance, c);
    std::vector<int> idx(instance.n() + 1, -1);
    for (std::size_t i = 0; i < c.clusters.size(); ++i)
        for (int v : c.clusters[i]) idx[v] = static_cast<int>(i);
    return idx;
}

}  // namespace

int clustering_cost(const ColoredInstance& instance, const Clustering& clustering) {
    auto idx = cluster_index(instance, clustering);
    int cut = 0;
    for (auto [u, v] : instance.edges())
        if (idx[u] != idx[v]) ++cut;
    int missing = 0;
    for (const auto& cluster : clustering.clusters)
        for (std::size_t i = 0; i < cluster.size(); ++i)
            for (std::size_t j = i + 1; j < cluster.size(); ++j)
                if (!instance.has_edge(cluster[i], cluster[j])) ++missing;
    return cut + missing;
}

int cost_from_pair_counts(const ColoredInstance& instance, const Clustering& clustering) {
    auto idx = cluster_index(instance, clustering);
    int a = 0;
    for (const auto& cluster : clustering.clusters) {
        int s = static_cast<int>(cluster.size());
        a += s * (s - 1) / 2;
    }
    int b = 0;
    for (auto [u, v] : instance.edges())
        if (idx[u] == idx[v]) ++b;
    return instance.m() + a - 2 * b;
}

bool is_fair(const Clustering& clustering, const FairletVector& fairlet,
             const std::vector<int>& color) {
    const int kappa = static_cast<int>(fairlet.counts.size());
    for (const auto& cluster : clustering.clusters) {
        std::vector<int> counts(kappa, 0);
        for (int v : cluster) ++counts[color[v] - 1];
        int total = static_cast<int>(cluster.size());
        if (total % fairlet.size != 0) return false;
        int d = total / fairlet.size;
        for (int i = 0; i < kappa; ++i)
            if (counts[i] != d * fairlet.counts[i]) return false;
    }
    return true;
}

int max_cluster_size_bound(int width_upper_bound, int fairlet_size) {
    return std::max(24 * width_upper_bound, fairlet_size);
}

}  // namespace fcc
