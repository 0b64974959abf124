#include "fcc/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>

namespace fcc {

namespace {

struct VcState {
    std::vector<std::vector<char>> adj;
    std::vector<char> alive;
    int n;

    int degree(int v) const {
        if (!alive[v]) return 0;
        int d = 0;
        for (int u = 1; u <= n; ++u)
            if (alive[u] && adj[v][u]) ++d;
        return d;
    }
    void remove(int v) { alive[v] = 0; }
    bool any_edge() const {
        for (int v = 1; v <= n; ++v)
            if (alive[v] && degree(v) > 0) return true;
        return false;
    }
};

void vc_branch(VcState& st, std::vector<int>& current, std::vector<int>& best) {
    if (!best.empty() && static_cast<int>(current.size()) >= static_cast<int>(best.size()))
        return;

    // kernelize degree-0 and degree-1 vertices
    std::vector<int> removed_alive;
    std::vector<int> taken;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= st.n; ++v) {
            if (!st.alive[v]) continue;
            int d = st.degree(v);
            if (d == 0) {
                st.remove(v);
                removed_alive.push_back(v);
                changed = true;
            } else if (d == 1) {
                int u = 0;
                for (int w = 1; w <= st.n; ++w)
                    if (st.alive[w] && st.adj[v][w]) { u = w; break; }
                current.push_back(u);
                taken.push_back(u);
                st.remove(u);
                removed_alive.push_back(u);
                st.remove(v);
                removed_alive.push_back(v);
                changed = true;
                break;
            }
        }
    }

    auto undo = [&]() {
        for (int v : removed_alive) st.alive[v] = 1;
        for (std::size_t i = 0; i < taken.size(); ++i) current.pop_back();
    };

    if (!st.any_edge()) {
        if (best.empty() || current.size() < best.size()) best = current;
        undo();
        return;
    }
    if (!best.empty() && static_cast<int>(current.size()) >= static_cast<int>(best.size())) {
        undo();
        return;
    }

    int v = 0, dmax = -1;
    for (int u = 1; u <= st.n; ++u) {
        if (!st.alive[u]) continue;
        int d = st.degree(u);
        if (d > dmax) { dmax = d; v = u; }
    }

    // branch 1: v in the cover
    current.push_back(v);
    st.remove(v);
    vc_branch(st, current, best);
    st.alive[v] = 1;
    current.pop_back();

    // branch 2: all neighbors of v in the cover
    std::vector<int> nbrs;
    for (int u = 1; u <= st.n; ++u)
        if (st.alive[u] && st.adj[v][u]) nbrs.push_back(u);
    for (int u : nbrs) { current.push_back(u); st.remove(u); }
    st.remove(v);
    vc_branch(st, current, best);
    st.alive[v] = 1;
    for (int u : nbrs) { st.alive[u] = 1; current.pop_back(); }

    undo();
}

}  // namespace

VertexCoverResult min_vertex_cover(const ColoredInstance& graph) {
    VcState st;
    st.n = graph.n();
    st.adj.assign(st.n + 1, std::vector<char>(st.n + 1, 0));
    for (auto [u, v] : graph.edges()) st.adj[u][v] = st.adj[v][u] = 1;
    st.alive.assign(st.n + 1, 1);
    st.alive[0] = 0;

    std::vector<int> current, best;
    if (graph.m() == 0) {
        return {{}, 0};
    }
    vc_branch(st, current, best);
    std::sort(best.begin(), best.end());
    return {best, static_cast<int>(best.size())};
}

int RawTreeDecomposition::width() const {
    int w = 0;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w - 1;
}

namespace {

// Number of vertices outside X u {v} reachable from v via internal vertices in X.
int elimination_degree(const ColoredInstance& g, std::uint32_t x_mask, int v) {
    std::uint32_t seen_x = 0, reached = 0;
    std::vector<int> stack{v};
    std::uint32_t visited = 1u << (v - 1);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            std::uint32_t bit = 1u << (w - 1);
            if (x_mask & bit) {
                if (!(seen_x & bit)) {
                    seen_x |= bit;
                    stack.push_back(w);
                }
            } else if (!(visited & bit)) {
                reached |= bit;
            }
        }
    }
    return std::popcount(reached & ~(1u << (v - 1)));
}

int tw_dp(const ColoredInstance& g, std::uint32_t mask, std::vector<std::int8_t>& memo) {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    int best = g.n();
    for (int v = 1; v <= g.n(); ++v) {
        std::uint32_t bit = 1u << (v - 1);
        if (!(mask & bit)) continue;
        std::uint32_t rest = mask & ~bit;
        int q = elimination_degree(g, rest, v);
        if (q >= best) continue;  // max(...) cannot beat best
        int sub = tw_dp(g, rest, memo);
        best = std::min(best, std::max(sub, q));
    }
    memo[mask] = static_cast<std::int8_t>(best);
    return best;
}

std::vector<int> exact_elimination_order(const ColoredInstance& g) {
    const int n = g.n();
    std::vector<std::int8_t> memo(std::size_t(1) << n, -1);
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    tw_dp(g, full, memo);
    std::vector<int> order(n);
    std::uint32_t mask = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int width = tw_dp(g, mask, memo);
        for (int v = 1; v <= n; ++v) {
            std::uint32_t bit = 1u << (v - 1);
            if (!(mask & bit)) continue;
            std::uint32_t rest = mask & ~bit;
            if (std::max(tw_dp(g, rest, memo), elimination_degree(g, rest, v)) == width) {
                order[pos] = v;
                mask = rest;
                break;
            }
        }
    }
    return order;
}

std::vector<int> min_fill_order(const ColoredInstance& g) {
    const int n = g.n();
    std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> alive(n + 1, 1);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_fill = -1;
        for (int v = 1; v <= n; ++v) {
            if (!alive[v]) continue;
            std::vector<int> nbrs;
            for (int u = 1; u <= n; ++u)
                if (alive[u] && adj[v][u]) nbrs.push_back(u);
            int fill = 0;
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    if (!adj[nbrs[i]][nbrs[j]]) ++fill;
            if (best == -1 || fill < best_fill) { best = v; best_fill = fill; }
        }
        std::vector<int> nbrs;
        for (int u = 1; u <= n; ++u)
            if (alive[u] && adj[best][u]) nbrs.push_back(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                adj[nbrs[i]][nbrs[j]] = adj[nbrs[j]][nbrs[i]] = 1;
        alive[best] = 0;
        order.push_back(best);
    }
    return order;
}

RawTreeDecomposition decomposition_from_order(const ColoredInstance& g,
                                              const std::vector<int>& order) {
    const int n = g.n();
    std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    RawTreeDecomposition td;
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u = 1; u <= n; ++u)
            if (adj[v][u] && pos[u] > i) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                adj[later[a]][later[b]] = adj[later[b]][later[a]] = 1;
        td.bags[i] = later;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        if (!later.empty()) {
            int first = *std::min_element(later.begin(), later.end(),
                                          [&](int a, int b) { return pos[a] < pos[b]; });
            td.tree_edges.emplace_back(i, pos[first]);
        } else if (i + 1 < n) {
            td.tree_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

}  // namespace

RawTreeDecomposition tree_decomposition(const ColoredInstance& graph, DecompMode mode,
                                        int exact_cap) {
    if (mode == DecompMode::Exact) {
        if (graph.n() > exact_cap)
            throw ParamError("exact tree decomposition limited to " +
                             std::to_string(exact_cap) + " vertices, got " +
                             std::to_string(graph.n()));
        auto td = decomposition_from_order(graph, exact_elimination_order(graph));
        validate_tree_decomposition(graph, td);
        return td;
    }
    auto td = decomposition_from_order(graph, min_fill_order(graph));
    validate_tree_decomposition(graph, td);
    return td;
}

void validate_tree_decomposition(const ColoredInstance& graph,
                                 const RawTreeDecomposition& td) {
    const int n = graph.n();
    const int b = static_cast<int>(td.bags.size());
    if (b == 0) throw ValidationError("tree decomposition has no bags");
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (v < 1 || v > n)
                throw ValidationError("bag contains vertex outside 1..n");
    if (static_cast<int>(td.tree_edges.size()) != b - 1)
        throw ValidationError("bag tree must have exactly #bags-1 edges");

    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || x >= b || y < 0 || y >= b || x == y)
            throw ValidationError("bag tree edge references invalid bag");
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    // connectivity of the bag tree
    {
        std::vector<char> seen(b, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tadj[x])
                if (!seen[y]) { seen[y] = 1; ++cnt; stack.push_back(y); }
        }
        if (cnt != b) throw ValidationError("bag tree is not connected");
    }

    std::vector<char> covered(n + 1, 0);
    for (const auto& bag : td.bags)
        for (int v : bag) covered[v] = 1;
    for (int v = 1; v <= n; ++v)
        if (!covered[v])
            throw ValidationError("vertex " + std::to_string(v) + " is in no bag");

    for (auto [u, v] : graph.edges()) {
        bool found = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found)
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} is contained in no bag");
    }

    // occurrence subtree of every vertex must be connected
    for (int v = 1; v <= n; ++v) {
        std::vector<char> has(b, 0);
        int total = 0, start = -1;
        for (int i = 0; i < b; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                has[i] = 1;
                ++total;
                start = i;
            }
        std::vector<char> seen(b, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tadj[x])
                if (has[y] && !seen[y]) { seen[y] = 1; ++cnt; stack.push_back(y); }
        }
        if (cnt != total)
            throw ValidationError("occurrence subtree of vertex " + std::to_string(v) +
                                  " is disconnected");
    }
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNodeKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
        nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
        return static_cast<int>(nodes.size()) - 1;
    }

    // chain of forgets/introduces transforming node `idx` (bag `from`) into bag `to`
    int morph(int idx, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> bag = from;
        for (int v : from) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag.erase(std::find(bag.begin(), bag.end(), v));
                idx = add(NiceNodeKind::Forget, v, bag, {idx});
            }
        }
        for (int v : to) {
            if (!std::binary_search(from.begin(), from.end(), v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                idx = add(NiceNodeKind::Introduce, v, bag, {idx});
            }
        }
        return idx;
    }

    // build a node whose bag equals `bag` starting from nothing
    int grow(const std::vector<int>& bag) {
        int idx = add(NiceNodeKind::Leaf, bag[0], {bag[0]}, {});
        std::vector<int> cur{bag[0]};
        for (std::size_t i = 1; i < bag.size(); ++i) {
            cur.push_back(bag[i]);
            idx = add(NiceNodeKind::Introduce, bag[i], cur, {idx});
        }
        return idx;
    }
};

}  // namespace

NiceTreeDecomposition to_nice(const RawTreeDecomposition& raw, const ColoredInstance& graph) {
    validate_tree_decomposition(graph, raw);

    // copy bags; replace empty bags by a nonempty neighbor's content so every
    // subtree has something to put in a leaf
    auto bags = raw.bags;
    const int b = static_cast<int>(bags.size());
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : raw.tree_edges) {
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < b; ++i) {
            if (!bags[i].empty()) continue;
            for (int j : tadj[i])
                if (!bags[j].empty()) {
                    bags[i] = bags[j];
                    changed = true;
                    break;
                }
        }
    }

    NiceBuilder nb;
    std::function<int(int, int)> build = [&](int bag_idx, int parent) -> int {
        std::vector<int> kids;
        for (int j : tadj[bag_idx])
            if (j != parent) kids.push_back(j);
        if (kids.empty()) return nb.grow(bags[bag_idx]);
        std::vector<int> tops;
        tops.reserve(kids.size());
        for (int j : kids) {
            int sub = build(j, bag_idx);
            tops.push_back(nb.morph(sub, bags[j], bags[bag_idx]));
        }
        int acc = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i)
            acc = nb.add(NiceNodeKind::Join, 0, bags[bag_idx], {acc, tops[i]});
        return acc;
    };

    int top = build(0, -1);
    top = nb.morph(top, bags[0], {});

    NiceTreeDecomposition nice;
    nice.nodes = std::move(nb.nodes);
    nice.root = top;
    int w = 0;
    for (const auto& node : nice.nodes) w = std::max(w, static_cast<int>(node.bag.size()));
    nice.width = w - 1;
    return nice;
}

void validate_nice(const ColoredInstance& graph, const NiceTreeDecomposition& nice) {
    const auto& nodes = nice.nodes;
    if (nodes.empty()) throw ValidationError("nice decomposition has no nodes");
    if (nice.root < 0 || nice.root >= static_cast<int>(nodes.size()))
        throw ValidationError("invalid root index");
    if (!nodes[nice.root].bag.empty()) throw ValidationError("root bag must be empty");

    std::vector<char> is_child(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& t = nodes[i];
        if (!std::is_sorted(t.bag.begin(), t.bag.end()))
            throw ValidationError("bag not sorted");
        for (int c : t.children) {
            if (c < 0 || c >= static_cast<int>(i))
                throw ValidationError("children must precede parents");
            is_child[c] = 1;
        }
        auto diff_size = [&](const std::vector<int>& big, const std::vector<int>& small) {
            std::vector<int> d;
            std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                                std::back_inserter(d));
            return d;
        };
        switch (t.kind) {
            case NiceNodeKind::Leaf:
                if (!t.children.empty()) throw ValidationError("leaf with children");
                if (t.bag.size() != 1) throw ValidationError("leaf bag must have size 1");
                if (t.bag[0] != t.vertex) throw ValidationError("leaf vertex mismatch");
                break;
            case NiceNodeKind::Introduce: {
                if (t.children.size() != 1) throw ValidationError("introduce needs one child");
                const auto& cb = nodes[t.children[0]].bag;
                auto added = diff_size(t.bag, cb);
                auto lost = diff_size(cb, t.bag);
                if (added.size() != 1 || !lost.empty() || added[0] != t.vertex)
                    throw ValidationError("introduce must add exactly its vertex");
                break;
            }
            case NiceNodeKind::Forget: {
                if (t.children.size() != 1) throw ValidationError("forget needs one child");
                const auto& cb = nodes[t.children[0]].bag;
                auto added = diff_size(t.bag, cb);
                auto lost = diff_size(cb, t.bag);
                if (lost.size() != 1 || !added.empty() || lost[0] != t.vertex)
                    throw ValidationError("forget must remove exactly its vertex");
                break;
            }
            case NiceNodeKind::Join: {
                if (t.children.size() != 2) throw ValidationError("join needs two children");
                if (nodes[t.children[0]].bag != t.bag || nodes[t.children[1]].bag != t.bag)
                    throw ValidationError("join children must share the join bag");
                break;
            }
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!is_child[i] && static_cast<int>(i) != nice.root)
            throw ValidationError("node unreachable from root");

    // every edge in some bag; occurrence sets form subtrees
    const int n = graph.n();
    std::vector<std::vector<int>> occurs(n + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int v : nodes[i].bag) occurs[v].push_back(static_cast<int>(i));
    for (int v = 1; v <= n; ++v)
        if (occurs[v].empty())
            throw ValidationError("vertex " + std::to_string(v) + " is in no bag");
    for (auto [u, v] : graph.edges()) {
        bool found = false;
        for (int i : occurs[u]) {
            const auto& bag = nodes[i].bag;
            if (std::binary_search(bag.begin(), bag.end(), v)) { found = true; break; }
        }
        if (!found)
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} is contained in no bag");
    }
    // connectivity: each vertex must appear in a contiguous region w.r.t. the
    // child->parent relation; count nodes whose parent does not contain v
    std::vector<int> parent(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int c : nodes[i].children) parent[c] = static_cast<int>(i);
    for (int v = 1; v <= n; ++v) {
        int maximal = 0;
        for (int i : occurs[v]) {
            int p = parent[i];
            const auto* pbag = (p >= 0) ? &nodes[p].bag : nullptr;
            if (!pbag || !std::binary_search(pbag->begin(), pbag->end(), v)) ++maximal;
        }
        if (maximal != 1)
            throw ValidationError("occurrence subtree of vertex " + std::to_string(v) +
                                  " is disconnected");
    }
}

namespace {

std::vector<std::uint32_t> mask_components(const std::vector<std::vector<int>>& local_adj,
                                           std::uint32_t mask) {
    std::vector<std::uint32_t> comps;
    std::uint32_t left = mask;
    while (left) {
        int v = std::countr_zero(left);
        std::uint32_t comp = 0, frontier = 1u << v;
        while (frontier) {
            comp |= frontier;
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                for (int w : local_adj[u]) {
                    std::uint32_t bit = 1u << w;
                    if ((mask & bit) && !(comp & bit)) next |= bit;
                }
            }
            frontier = next;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

struct TdExact {
    std::vector<std::vector<int>> adj;  // local 0-based
    std::vector<std::int8_t> memo;      // per connected mask; -1 unknown

    int td_any(std::uint32_t mask) {
        int h = 0;
        for (std::uint32_t comp : mask_components(adj, mask))
            h = std::max(h, td_conn(comp));
        return h;
    }

    int td_conn(std::uint32_t comp) {
        if (std::popcount(comp) == 1) return 1;
        if (memo[comp] >= 0) return memo[comp];
        int best = std::popcount(comp);
        std::uint32_t m = comp;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int h = 1 + td_any(comp & ~(1u << v));
            best = std::min(best, h);
            if (best == 1 + 0) break;
        }
        memo[comp] = static_cast<std::int8_t>(best);
        return best;
    }

    void build(std::uint32_t mask, int parent_local, std::vector<int>& parent_out,
               const std::vector<int>& local_to_global) {
        for (std::uint32_t comp : mask_components(adj, mask)) {
            if (std::popcount(comp) == 1) {
                int v = std::countr_zero(comp);
                parent_out[local_to_global[v]] =
                    parent_local < 0 ? 0 : local_to_global[parent_local];
                continue;
            }
            int target = td_conn(comp);
            std::uint32_t m = comp;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (1 + td_any(comp & ~(1u << v)) == target) {
                    parent_out[local_to_global[v]] =
                        parent_local < 0 ? 0 : local_to_global[parent_local];
                    build(comp & ~(1u << v), v, parent_out, local_to_global);
                    break;
                }
            }
        }
    }
};

std::vector<std::vector<int>> graph_components(const ColoredInstance& g) {
    std::vector<char> seen(g.n() + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 1; s <= g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

TreedepthForest treedepth_forest(const ColoredInstance& graph, DecompMode mode,
                                 int exact_cap) {
    const int n = graph.n();
    TreedepthForest f;
    f.parent.assign(n + 1, 0);

    if (mode == DecompMode::Exact) {
        if (n > exact_cap)
            throw ParamError("exact treedepth limited to " + std::to_string(exact_cap) +
                             " vertices, got " + std::to_string(n));
        for (const auto& comp : graph_components(graph)) {
            const int nc = static_cast<int>(comp.size());
            TdExact solver;
            solver.adj.assign(nc, {});
            std::vector<int> local(graph.n() + 1, -1);
            for (int i = 0; i < nc; ++i) local[comp[i]] = i;
            for (int i = 0; i < nc; ++i)
                for (int u : graph.neighbors(comp[i]))
                    if (local[u] >= 0) solver.adj[i].push_back(local[u]);
            solver.memo.assign(std::size_t(1) << nc, -1);
            std::uint32_t full = (nc == 32) ? ~0u : ((1u << nc) - 1);
            solver.td_conn(full);
            solver.build(full, -1, f.parent, comp);
        }
    } else {
        // DFS forest: all non-tree edges are back edges, hence ancestor pairs
        std::vector<char> seen(n + 1, 0);
        std::function<void(int, int)> dfs = [&](int v, int p) {
            seen[v] = 1;
            f.parent[v] = p;
            for (int u : graph.neighbors(v))
                if (!seen[u]) dfs(u, v);
        };
        for (int v = 1; v <= n; ++v)
            if (!seen[v]) dfs(v, 0);
    }

    auto depths = forest_depths(f);
    f.height = *std::max_element(depths.begin() + 1, depths.end());
    validate_treedepth_forest(graph, f);
    return f;
}

std::vector<int> forest_depths(const TreedepthForest& forest) {
    const int n = static_cast<int>(forest.parent.size()) - 1;
    std::vector<int> depth(n + 1, 0);
    std::function<int(int)> get = [&](int v) -> int {
        if (depth[v]) return depth[v];
        if (forest.parent[v] == 0) return depth[v] = 1;
        return depth[v] = 1 + get(forest.parent[v]);
    };
    for (int v = 1; v <= n; ++v) get(v);
    return depth;
}

void validate_treedepth_forest(const ColoredInstance& graph, const TreedepthForest& forest) {
    const int n = graph.n();
    if (static_cast<int>(forest.parent.size()) != n + 1)
        throw ValidationError("forest parent array must cover 1..n");
    for (int v = 1; v <= n; ++v) {
        int p = forest.parent[v];
        if (p < 0 || p > n || p == v)
            throw ValidationError("invalid parent of vertex " + std::to_string(v));
        // cycle check: walking up must terminate within n steps
        int steps = 0, u = v;
        while (u != 0) {
            u = forest.parent[u];
            if (++steps > n) throw ValidationError("forest contains a cycle");
        }
    }
    auto is_ancestor = [&](int a, int v) {
        for (int u = forest.parent[v]; u != 0; u = forest.parent[u])
            if (u == a) return true;
        return false;
    };
    for (auto [u, v] : graph.edges())
        if (!is_ancestor(u, v) && !is_ancestor(v, u))
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} is not an ancestor-descendant pair");
    auto depths = forest_depths(forest);
    if (forest.height != *std::max_element(depths.begin() + 1, depths.end()))
        throw ValidationError("forest height field inconsistent with parent array");
}

}  // namespace fcc
