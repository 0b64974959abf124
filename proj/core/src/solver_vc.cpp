#include "fcc/solver_vc.hpp"

#include <algorithm>
#include <cassert>

#include "fcc/decomp.hpp"

namespace fcc {

namespace {

struct PreEnum {
    const ColoredInstance& g;
    const FairletVector& fairlet;
    const std::vector<int>& cover;
    const std::function<bool(const PreClustering&)>& visit;
    int size_cap;  // min(n, max(24k, fairlet size))
    std::vector<int> assign;   // part id per cover position (restricted growth)
    bool stopped = false;

    bool emit_with_sizes() {
        int parts_count = cover.empty()
                              ? 0
                              : *std::max_element(assign.begin(), assign.end()) + 1;
        PreClustering pre;
        pre.parts.assign(parts_count, {});
        for (std::size_t i = 0; i < cover.size(); ++i)
            pre.parts[assign[i]].push_back(cover[i]);

        // per-part color counts for feasibility filtering
        std::vector<std::vector<int>> part_colors(parts_count,
                                                  std::vector<int>(g.kappa(), 0));
        for (int p = 0; p < parts_count; ++p)
            for (int v : pre.parts[p]) ++part_colors[p][g.color(v) - 1];

        pre.multipliers.assign(parts_count, 0);
        int max_d = size_cap / fairlet.size;

        std::function<bool(int, int)> rec_sizes = [&](int p, int used) -> bool {
            if (p == parts_count) return visit(pre);
            for (int d = 1; d <= max_d; ++d) {
                int size = d * fairlet.size;
                if (used + size > g.n()) break;
                bool ok = true;
                for (int i = 0; i < g.kappa() && ok; ++i)
                    if (part_colors[p][i] > d * fairlet.counts[i]) ok = false;
                if (!ok) continue;
                pre.multipliers[p] = d;
                if (!rec_sizes(p + 1, used + size)) return false;
            }
            return true;
        };
        return rec_sizes(0, 0);
    }

    void rec(std::size_t i, int max_used) {
        if (stopped) return;
        if (i == cover.size()) {
            if (!emit_with_sizes()) stopped = true;
            return;
        }
        for (int c = 0; c <= max_used + 1 && !stopped; ++c) {
            assign[i] = c;
            rec(i + 1, std::max(max_used, c));
        }
    }
};

}  // namespace

void enumerate_preclusterings(const std::vector<int>& cover, const ColoredInstance& instance,
                              const FairletVector& fairlet,
                              const std::function<bool(const PreClustering&)>& visit) {
    const int k = static_cast<int>(cover.size());
    int cap = std::min(instance.n(), max_cluster_size_bound(k, fairlet.size));
    PreEnum e{instance, fairlet, cover, visit, cap, std::vector<int>(cover.size(), 0)};
    if (cover.empty()) {
        e.emit_with_sizes();
        return;
    }
    e.assign[0] = 0;
    e.rec(1, 0);
}

SpotGraph build_spot_graph(const PreClustering& pre, const ColoredInstance& instance,
                           const FairletVector& fairlet) {
    SpotGraph sg;
    std::vector<char> in_cover(instance.n() + 1, 0);
    for (const auto& part : pre.parts)
        for (int v : part) in_cover[v] = 1;

    for (std::size_t p = 0; p < pre.parts.size(); ++p) {
        std::vector<int> have(instance.kappa(), 0);
        for (int v : pre.parts[p]) ++have[instance.color(v) - 1];
        int d = pre.multipliers[p];
        for (int c = 1; c <= instance.kappa(); ++c) {
            int missing = d * fairlet.count_for(c) - have[c - 1];
            for (int s = 0; s < missing; ++s)
                sg.spots.push_back({c, static_cast<int>(p)});
        }
    }
    for (int v = 1; v <= instance.n(); ++v)
        if (!in_cover[v]) {
            sg.right_vertex.push_back(v);
            sg.right_color.push_back(instance.color(v));
        }

    sg.weight.assign(sg.spots.size(), std::vector<int>(sg.right_vertex.size(), -1));
    for (std::size_t s = 0; s < sg.spots.size(); ++s)
        for (std::size_t r = 0; r < sg.right_vertex.size(); ++r) {
            if (sg.spots[s].color != sg.right_color[r]) continue;
            int w = 0;
            for (int u : pre.parts[sg.spots[s].part])
                if (instance.has_edge(u, sg.right_vertex[r])) ++w;
            sg.weight[s][r] = w;
        }
    return sg;
}

namespace {

// Pool the given vertices by color and emit fairlet-sized clusters in
// ascending vertex order. Requires (and asserts) that the color counts are an
// integer multiple of the fairlet vector.
std::vector<std::vector<int>> tile_into_fairlets(const std::vector<int>& vertices,
                                                 const ColoredInstance& g,
                                                 const FairletVector& fairlet) {
    std::vector<std::vector<int>> buckets(g.kappa());
    for (int v : vertices) buckets[g.color(v) - 1].push_back(v);
    for (auto& b : buckets) std::sort(b.begin(), b.end());
    for (int i = 0; i < g.kappa(); ++i) {
        int c = fairlet.counts[i];
        assert(c == 0 ? buckets[i].empty()
                      : static_cast<int>(buckets[i].size()) % c == 0);
    }
    int copies = vertices.empty() ? 0 : static_cast<int>(vertices.size()) / fairlet.size;
    std::vector<std::vector<int>> clusters;
    std::vector<std::size_t> next(g.kappa(), 0);
    for (int t = 0; t < copies; ++t) {
        std::vector<int> cl;
        for (int i = 0; i < g.kappa(); ++i)
            for (int j = 0; j < fairlet.counts[i]; ++j) cl.push_back(buckets[i][next[i]++]);
        clusters.push_back(std::move(cl));
    }
    return clusters;
}

}  // namespace

SolveResult solve_vc(const ColoredInstance& instance, const Deadline* deadline) {
    FairletVector fairlet = compute_fairlet(instance);
    VertexCoverResult vc = min_vertex_cover(instance);

    std::optional<SolveResult> best;
    enumerate_preclusterings(vc.cover, instance, fairlet, [&](const PreClustering& pre) {
        check_deadline(deadline);
        SpotGraph sg = build_spot_graph(pre, instance, fairlet);
        auto match = max_weight_saturating_matching(sg);
        if (!match) return true;  // this branch cannot be completed

        std::vector<std::vector<int>> clusters(pre.parts.size());
        std::vector<char> used(instance.n() + 1, 0);
        for (std::size_t p = 0; p < pre.parts.size(); ++p) {
            clusters[p] = pre.parts[p];
            for (int v : pre.parts[p]) used[v] = 1;
        }
        for (std::size_t s = 0; s < sg.spots.size(); ++s) {
            int v = sg.right_vertex[match->spot_to_right[s]];
            clusters[sg.spots[s].part].push_back(v);
            used[v] = 1;
        }
        std::vector<int> leftovers;
        for (int v = 1; v <= instance.n(); ++v)
            if (!used[v]) leftovers.push_back(v);
        for (auto& cl : tile_into_fairlets(leftovers, instance, fairlet))
            clusters.push_back(std::move(cl));

        Clustering c = Clustering::of(std::move(clusters));
        int cost = clustering_cost(instance, c);
        if (!best || cost < best->cost) best = SolveResult{cost, std::move(c)};
        return true;
    });
    return *best;
}

}  // namespace fcc
