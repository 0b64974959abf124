#include "fcc/matching.hpp"

#include <algorithm>
#include <limits>

namespace fcc {

namespace {

// minimal successive-shortest-path min-cost max-flow, Bellman-Ford variant
struct Mcmf {
    struct Edge {
        int to;
        int cap;
        long long cost;
        int rev;
    };
    std::vector<std::vector<Edge>> g;

    explicit Mcmf(int nodes) : g(nodes) {}

    void add(int u, int v, int cap, long long cost) {
        g[u].push_back({v, cap, cost, static_cast<int>(g[v].size())});
        g[v].push_back({u, 0, -cost, static_cast<int>(g[u].size()) - 1});
    }

    // returns (flow, cost)
    std::pair<int, long long> run(int s, int t) {
        int flow = 0;
        long long cost = 0;
        const long long inf = std::numeric_limits<long long>::max() / 4;
        for (;;) {
            std::vector<long long> dist(g.size(), inf);
            std::vector<int> pv(g.size(), -1), pe(g.size(), -1);
            dist[s] = 0;
            for (bool relaxed = true; relaxed;) {
                relaxed = false;
                for (std::size_t u = 0; u < g.size(); ++u) {
                    if (dist[u] == inf) continue;
                    for (std::size_t i = 0; i < g[u].size(); ++i) {
                        const Edge& e = g[u][i];
                        if (e.cap > 0 && dist[u] + e.cost < dist[e.to]) {
                            dist[e.to] = dist[u] + e.cost;
                            pv[e.to] = static_cast<int>(u);
                            pe[e.to] = static_cast<int>(i);
                            relaxed = true;
                        }
                    }
                }
            }
            if (dist[t] == inf) break;
            for (int v = t; v != s; v = pv[v]) g[pv[v]][pe[v]].cap -= 1;
            for (int v = t; v != s; v = pv[v]) {
                Edge& e = g[pv[v]][pe[v]];
                g[e.to][e.rev].cap += 1;
            }
            flow += 1;
            cost += dist[t];
        }
        return {flow, cost};
    }
};

}  // namespace

std::optional<MatchingResult> max_weight_saturating_matching(const SpotGraph& sg) {
    const int ns = static_cast<int>(sg.spots.size());
    const int nr = static_cast<int>(sg.right_vertex.size());
    if (ns == 0) return MatchingResult{0, {}};
    if (ns > nr) return std::nullopt;

    // scale weights so that maximizing total weight dominates, then prefer
    // low vertex indices among weight ties
    long long max_idx = 0;
    for (int v : sg.right_vertex) max_idx = std::max<long long>(max_idx, v);
    const long long scale = static_cast<long long>(ns) * (max_idx + 1) + 1;

    const int source = 0, sink = 1;
    Mcmf net(2 + ns + nr);
    for (int s = 0; s < ns; ++s) net.add(source, 2 + s, 1, 0);
    for (int r = 0; r < nr; ++r) net.add(2 + ns + r, sink, 1, 0);
    for (int s = 0; s < ns; ++s)
        for (int r = 0; r < nr; ++r) {
            if (sg.spots[s].color != sg.right_color[r]) continue;
            long long gain = static_cast<long long>(sg.weight[s][r]) * scale -
                             sg.right_vertex[r];
            net.add(2 + s, 2 + ns + r, 1, -gain);
        }

    auto [flow, path_cost] = net.run(source, sink);
    (void)path_cost;  // the weight is re-read from the saturated edges below
    if (flow < ns) return std::nullopt;

    MatchingResult res;
    res.spot_to_right.assign(ns, -1);
    for (int s = 0; s < ns; ++s)
        for (const auto& e : net.g[2 + s])
            if (e.to >= 2 + ns && e.to < 2 + ns + nr && e.cap == 0) {
                int r = e.to - 2 - ns;
                res.spot_to_right[s] = r;
                res.total_weight += sg.weight[s][r];
            }
    return res;
}

}  // namespace fcc
