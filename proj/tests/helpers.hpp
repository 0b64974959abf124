#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "fcc/instance.hpp"

namespace fcc::testing {

/// The 9-vertex two-color demo instance shipped as data/fig1.fcc.
inline ColoredInstance fig1() {
    std::vector<std::pair<int, int>> edges = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                              {2, 5}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                              {6, 8}, {7, 8}, {8, 9}};
    //                    1  2  3  4  5  6  7  8  9
    std::vector<int> colors{1, 1, 1, 2, 2, 1, 2, 1, 1};
    return ColoredInstance::create(9, edges, colors, 2);
}

inline ColoredInstance fig1_mono() {
    std::vector<std::pair<int, int>> edges = fig1().edges();
    return ColoredInstance::create(9, edges, std::vector<int>(9, 1), 1);
}

/// Independent reference cost: count cut edges and within-cluster non-edges
/// straight off the edge list and the partition, no shared code with fcc.
inline int naive_cost(int n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::vector<int>>& clusters) {
    std::vector<int> part(n + 1, -1);
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (int v : clusters[i]) part[v] = static_cast<int>(i);
    std::set<std::pair<int, int>> es(edges.begin(), edges.end());
    int cost = 0;
    for (auto [u, v] : es)
        if (part[u] != part[v]) ++cost;
    for (const auto& cl : clusters)
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                auto e = std::minmax(cl[i], cl[j]);
                if (!es.count({e.first, e.second})) ++cost;
            }
    return cost;
}

/// Visits every set partition of 1..n (restricted growth enumeration,
/// reimplemented here so oracle tests have an independent reference).
inline void all_partitions(int n,
                           const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<int> assign(n + 1, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v > n) {
            std::vector<std::vector<int>> parts(used);
            for (int u = 1; u <= n; ++u) parts[assign[u]].push_back(u);
            f(parts);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            assign[v] = c;
            rec(v + 1, std::max(used, c + 1));
        }
    };
    rec(1, 0);
}

inline bool naive_fair(const std::vector<std::vector<int>>& clusters,
                       const std::vector<int>& fairlet, const std::vector<int>& colors) {
    int ctilde = std::accumulate(fairlet.begin(), fairlet.end(), 0);
    for (const auto& cl : clusters) {
        if (cl.size() % ctilde != 0) return false;
        int d = static_cast<int>(cl.size()) / ctilde;
        std::vector<int> cnt(fairlet.size(), 0);
        for (int v : cl) ++cnt[colors[v] - 1];
        for (std::size_t i = 0; i < fairlet.size(); ++i)
            if (cnt[i] != d * fairlet[i]) return false;
    }
    return true;
}

/// Reference fair-clustering optimum by filtering all set partitions.
inline int naive_fair_optimum(const ColoredInstance& g, const std::vector<int>& fairlet,
                              std::optional<int> max_cluster = std::nullopt) {
    int best = -1;
    all_partitions(g.n(), [&](const std::vector<std::vector<int>>& parts) {
        if (max_cluster)
            for (const auto& cl : parts)
                if (static_cast<int>(cl.size()) > *max_cluster) return;
        if (!naive_fair(parts, fairlet, g.colors())) return;
        int c = naive_cost(g.n(), g.edges(), parts);
        if (best < 0 || c < best) best = c;
    });
    return best;
}

/// All graphs on n labeled vertices, one per isomorphism class (canonical form
/// by minimizing the adjacency bitstring over all vertex permutations).
inline std::vector<std::vector<std::pair<int, int>>> nonisomorphic_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());

    std::vector<int> perm(n);
    std::set<unsigned long long> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    for (unsigned long long mask = 0; mask < (1ull << np); ++mask) {
        std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
        for (int i = 0; i < np; ++i)
            if (mask >> i & 1) {
                adj[pairs[i].first][pairs[i].second] = 1;
                adj[pairs[i].second][pairs[i].first] = 1;
            }
        std::iota(perm.begin(), perm.end(), 1);
        unsigned long long canon = ~0ull;
        do {
            unsigned long long m = 0;
            for (int i = 0; i < np; ++i)
                if (adj[perm[pairs[i].first - 1]][perm[pairs[i].second - 1]]) m |= 1ull << i;
            canon = std::min(canon, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canon).second) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < np; ++i)
                if (canon >> i & 1) edges.push_back(pairs[i]);
            out.push_back(std::move(edges));
        }
    }
    return out;
}

/// Every coloring of 1..n with the exact per-color counts given.
inline void colorings_with_counts(int n, const std::vector<int>& counts,
                                  const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> colors;
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (int j = 0; j < counts[i]; ++j) colors.push_back(static_cast<int>(i) + 1);
    std::sort(colors.begin(), colors.end());
    do {
        std::vector<int> c(n + 1, 0);
        for (int v = 1; v <= n; ++v) c[v] = colors[v - 1];
        f(c);
    } while (std::next_permutation(colors.begin(), colors.end()));
}

}  // namespace fcc::testing
