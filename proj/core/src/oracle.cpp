#include "fcc/oracle.hpp"

#include <algorithm>

namespace fcc {

namespace {

struct Enumerator {
    const ColoredInstance& g;
    const OracleParams& params;
    const std::function<bool(const Clustering&)>& visit;
    FairletVector fairlet;
    std::vector<int> assign;       // restricted growth string, index 1..n
    std::vector<int> cluster_size;
    bool stopped = false;
    long long tick = 0;

    bool fair_at_leaf() const {
        int used = *std::max_element(assign.begin() + 1, assign.end()) + 1;
        std::vector<std::vector<int>> counts(used, std::vector<int>(g.kappa(), 0));
        std::vector<int> sizes(used, 0);
        for (int v = 1; v <= g.n(); ++v) {
            ++counts[assign[v]][g.color(v) - 1];
            ++sizes[assign[v]];
        }
        for (int c = 0; c < used; ++c) {
            if (sizes[c] % fairlet.size != 0) return false;
            int d = sizes[c] / fairlet.size;
            for (int i = 0; i < g.kappa(); ++i)
                if (counts[c][i] != d * fairlet.counts[i]) return false;
        }
        return true;
    }

    Clustering materialize() const {
        int used = *std::max_element(assign.begin() + 1, assign.end()) + 1;
        std::vector<std::vector<int>> parts(used);
        for (int v = 1; v <= g.n(); ++v) parts[assign[v]].push_back(v);
        return Clustering::of(std::move(parts));
    }

    void rec(int v, int max_used) {
        if (stopped) return;
        if ((++tick & 0x3ff) == 0) check_deadline(params.deadline);
        if (v > g.n()) {
            if (fair_at_leaf() && !visit(materialize())) stopped = true;
            return;
        }
        for (int c = 0; c <= max_used + 1 && !stopped; ++c) {
            if (params.max_cluster_size &&
                c <= max_used && cluster_size[c] >= *params.max_cluster_size)
                continue;
            assign[v] = c;
            ++cluster_size[c];
            rec(v + 1, std::max(max_used, c));
            --cluster_size[c];
        }
    }
};

}  // namespace

void enumerate_fair_clusterings(const ColoredInstance& instance, const OracleParams& params,
                                const std::function<bool(const Clustering&)>& visit) {
    if (instance.n() > params.cap)
        throw ParamError("oracle limited to " + std::to_string(params.cap) +
                         " vertices, got " + std::to_string(instance.n()));
    Enumerator e{instance, params, visit, compute_fairlet(instance),
                 std::vector<int>(instance.n() + 1, 0),
                 std::vector<int>(instance.n() + 2, 0)};
    e.assign[1] = 0;
    e.cluster_size[0] = 1;
    e.rec(2, 0);
}

SolveResult brute_force_optimum(const ColoredInstance& instance, const OracleParams& params) {
    std::optional<SolveResult> best;
    enumerate_fair_clusterings(instance, params, [&](const Clustering& c) {
        int cost = clustering_cost(instance, c);
        if (!best || cost < best->cost) best = SolveResult{cost, c};
        return true;
    });
    // a fair clustering always exists: the single all-vertex cluster is fair
    return *best;
}

namespace {

bool cluster_connected(const ColoredInstance& g, const std::vector<int>& cluster) {
    if (cluster.size() <= 1) return true;
    std::vector<int> stack{cluster[0]};
    std::vector<char> in(g.n() + 1, 0), seen(g.n() + 1, 0);
    for (int v : cluster) in[v] = 1;
    seen[cluster[0]] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (in[u] && !seen[u]) { seen[u] = 1; ++cnt; stack.push_back(u); }
    }
    return cnt == cluster.size();
}

}  // namespace

std::optional<Clustering> find_nice_optimum(const ColoredInstance& instance,
                                            const OracleParams& params) {
    FairletVector fairlet = compute_fairlet(instance);
    if (fairlet.size != 2)
        throw ParamError("find_nice_optimum requires fairlet size 2, got " +
                         std::to_string(fairlet.size));
    int opt = brute_force_optimum(instance, params).cost;
    std::optional<Clustering> found;
    enumerate_fair_clusterings(instance, params, [&](const Clustering& c) {
        if (clustering_cost(instance, c) != opt) return true;
        for (const auto& cluster : c.clusters)
            if (cluster.size() > 2 && !cluster_connected(instance, cluster)) return true;
        found = c;
        return false;
    });
    return found;
}

bool verify_solution(const ColoredInstance& instance, const Clustering& clustering,
                     int budget) {
    try {
        validate_partition(instance, clustering);
    } catch (const ValidationError&) {
        return false;
    }
    if (!is_fair(clustering, compute_fairlet(instance), instance.colors())) return false;
    return clustering_cost(instance, clustering) <= budget;
}

}  // namespace fcc
