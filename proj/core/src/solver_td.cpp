#include "fcc/solver_td.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

#include "fcc/core.hpp"

namespace fcc {

namespace {

std::vector<std::string> types_for_state(const ColoredInstance& g,
                                         const std::vector<int>& parent,
                                         const std::vector<std::vector<char>>& adj) {
    const int n = g.n();
    std::vector<int> depth(n + 1, 0);
    std::function<int(int)> depth_of = [&](int v) -> int {
        if (depth[v]) return depth[v];
        return depth[v] = parent[v] == 0 ? 1 : 1 + depth_of(parent[v]);
    };
    for (int v = 1; v <= n; ++v) depth_of(v);

    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v)
        if (parent[v] != 0) children[parent[v]].push_back(v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });

    std::vector<std::string> code(n + 1);
    for (int v : order) {
        std::vector<int> anc_depths;
        for (int a = parent[v]; a != 0; a = parent[a])
            if (adj[v][a]) anc_depths.push_back(depth[a]);
        std::sort(anc_depths.begin(), anc_depths.end());
        std::vector<std::string> kid_codes;
        for (int c : children[v]) kid_codes.push_back(code[c]);
        std::sort(kid_codes.begin(), kid_codes.end());

        std::string s = "(c" + std::to_string(g.color(v)) + "|a";
        for (int d : anc_depths) s += std::to_string(d) + ",";
        s += "|";
        for (const auto& k : kid_codes) s += k;
        s += ")";
        code[v] = std::move(s);
    }
    code.erase(code.begin());  // drop unused slot 0, callers index from 0? keep 1-based:
    code.insert(code.begin(), std::string());
    return code;
}

}  // namespace

std::vector<std::string> vertex_types(const ColoredInstance& instance,
                                      const TreedepthForest& forest) {
    validate_treedepth_forest(instance, forest);
    std::vector<std::vector<char>> adj(instance.n() + 1,
                                       std::vector<char>(instance.n() + 1, 0));
    for (auto [u, v] : instance.edges()) adj[u][v] = adj[v][u] = 1;
    return types_for_state(instance, forest.parent, adj);
}

ReducedInstance reduce_by_types(const ColoredInstance& instance, const TreedepthForest& forest,
                                int gamma, std::optional<int> budget) {
    validate_treedepth_forest(instance, forest);
    if (gamma < 1) throw ParamError("gamma must be positive");

    const int n = instance.n();
    std::vector<int> parent = forest.parent;
    std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
    for (auto [u, v] : instance.edges()) adj[u][v] = adj[v][u] = 1;
    auto original_depths = forest_depths(forest);
    int max_depth = *std::max_element(original_depths.begin() + 1, original_depths.end());

    std::vector<std::pair<int, int>> removed;
    for (int layer = max_depth; layer >= 2; --layer) {
        auto code = types_for_state(instance, parent, adj);
        // group this layer's vertices by (parent, type); the shared parent pins
        // the whole ancestor path, which makes kept/cut groups interchangeable
        std::map<std::pair<int, std::string>, std::vector<int>> groups;
        for (int v = 1; v <= n; ++v)
            if (original_depths[v] == layer && parent[v] != 0)
                groups[{parent[v], code[v]}].push_back(v);
        for (auto& [key, verts] : groups) {
            std::sort(verts.begin(), verts.end());
            for (std::size_t i = gamma; i < verts.size(); ++i) {
                int v = verts[i];
                for (int a = parent[v]; a != 0; a = parent[a]) {
                    if (adj[v][a]) {
                        adj[v][a] = adj[a][v] = 0;
                        removed.emplace_back(std::min(v, a), std::max(v, a));
                    }
                }
                parent[v] = 0;
            }
        }
    }

    ReducedInstance out{instance.without_edges(removed), std::nullopt, removed, false};
    if (budget) {
        out.budget_after = *budget - static_cast<int>(removed.size());
        out.rejected = *out.budget_after < 0;
    }
    return out;
}

namespace {

std::vector<std::vector<int>> connected_components_of(const ColoredInstance& g) {
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

std::string encode_component(const ColoredInstance& g, const std::vector<int>& perm) {
    // perm[i] = original vertex at canonical position i
    std::string s;
    for (int v : perm) s += static_cast<char>('0' + g.color(v));
    s += '|';
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            s += g.has_edge(perm[i], perm[j]) ? '1' : '0';
    return s;
}

// minimum encoding over color-sorted vertex orders
std::pair<std::string, std::vector<int>> canonical_component(const ColoredInstance& g,
                                                             const std::vector<int>& comp) {
    std::vector<int> base = comp;
    std::sort(base.begin(), base.end(), [&](int a, int b) {
        return std::pair(g.color(a), a) < std::pair(g.color(b), b);
    });
    // permute only within color groups: the color prefix of the encoding is
    // minimal exactly for color-sorted orders
    std::vector<std::pair<int, int>> ranges;  // [from, to) per color group
    for (std::size_t i = 0; i < base.size();) {
        std::size_t j = i;
        while (j < base.size() && g.color(base[j]) == g.color(base[i])) ++j;
        ranges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        i = j;
    }
    std::string best;
    std::vector<int> best_perm;
    std::vector<int> perm = base;
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == ranges.size()) {
            std::string enc = encode_component(g, perm);
            if (best.empty() || enc < best) {
                best = std::move(enc);
                best_perm = perm;
            }
            return;
        }
        auto [from, to] = ranges[r];
        std::sort(perm.begin() + from, perm.begin() + to);
        do {
            rec(r + 1);
        } while (std::next_permutation(perm.begin() + from, perm.begin() + to));
    };
    rec(0);
    return {best, best_perm};
}

}  // namespace

std::vector<ComponentClass> component_classes(const ColoredInstance& graph, int zeta_cap) {
    std::map<std::string, ComponentClass> by_code;
    for (const auto& comp : connected_components_of(graph)) {
        if (static_cast<int>(comp.size()) > zeta_cap)
            throw ParamError("component of size " + std::to_string(comp.size()) +
                             " exceeds the cap " + std::to_string(zeta_cap));
        auto [code, perm] = canonical_component(graph, comp);
        auto& cls = by_code[code];
        if (cls.members.empty()) {
            cls.code = code;
            cls.rep_colors.clear();
            for (int v : perm) cls.rep_colors.push_back(graph.color(v));
            int s = static_cast<int>(perm.size());
            cls.rep_adj.assign(s, std::vector<char>(s, 0));
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j)
                    cls.rep_adj[i][j] = graph.has_edge(perm[i], perm[j]);
        }
        cls.members.push_back(perm);
    }
    std::vector<ComponentClass> out;
    out.reserve(by_code.size());
    for (auto& [code, cls] : by_code) {
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const auto& a, const auto& b) {
                      return *std::min_element(a.begin(), a.end()) <
                             *std::min_element(b.begin(), b.end());
                  });
        out.push_back(std::move(cls));
    }
    return out;
}

namespace {

// enumerate set partitions of 0..s-1 via restricted growth strings
void each_partition(int s, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> assign(s, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == s) {
            visit(assign);
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            assign[i] = c;
            rec(i + 1, std::max(max_used, c));
        }
    };
    if (s == 0) return;
    assign[0] = 0;
    rec(1, 0);
}

}  // namespace

TdProgram build_program(const std::vector<ComponentClass>& classes, const FairletVector& fairlet,
                        int gamma, std::optional<int> budget) {
    const int kappa = static_cast<int>(fairlet.counts.size());
    TdProgram tp;

    std::map<std::vector<int>, int> type_index;
    auto type_of_part = [&](const ComponentClass& cls, const std::vector<int>& part) {
        std::vector<int> t(kappa, 0);
        for (int pos : part) ++t[cls.rep_colors[pos] - 1];
        return t;
    };
    auto intern_type = [&](const std::vector<int>& t) {
        auto it = type_index.find(t);
        if (it != type_index.end()) return it->second;
        int id = static_cast<int>(tp.type_list.size());
        type_index.emplace(t, id);
        tp.type_list.push_back(t);
        return id;
    };

    // Cuts: every partition of a representative with all parts <= gamma.
    // Partitions of one class with equal part-type multisets and equal cost
    // are identical ILP columns, so they share one variable; the first
    // partition encountered serves as the realization recipe.
    struct RawCut {
        int class_idx;
        std::vector<std::vector<int>> parts;
        long long cost;
        std::map<int, int> produces;  // type id -> count
    };
    std::vector<RawCut> raw_cuts;
    std::map<std::pair<std::string, long long>, int> cut_dedup;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const auto& cls = classes[ci];
        const int s = static_cast<int>(cls.rep_colors.size());
        each_partition(s, [&](const std::vector<int>& assign) {
            int parts_count = *std::max_element(assign.begin(), assign.end()) + 1;
            std::vector<std::vector<int>> parts(parts_count);
            for (int i = 0; i < s; ++i) parts[assign[i]].push_back(i);
            for (const auto& part : parts)
                if (static_cast<int>(part.size()) > gamma) return;  // cannot join any cluster

            long long cost = 0;
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    bool same = assign[i] == assign[j];
                    bool edge = cls.rep_adj[i][j];
                    if (same && !edge) ++cost;   // non-edge within a part
                    if (!same && edge) ++cost;   // edge across parts
                }
            RawCut rc{static_cast<int>(ci), parts, cost, {}};
            for (const auto& part : parts) ++rc.produces[intern_type(type_of_part(cls, part))];
            std::string sig = std::to_string(ci) + ";";
            for (const auto& [t, cnt] : rc.produces)
                sig += std::to_string(t) + "x" + std::to_string(cnt) + ",";
            if (cut_dedup.emplace(std::make_pair(std::move(sig), cost),
                                  static_cast<int>(raw_cuts.size()))
                    .second)
                raw_cuts.push_back(std::move(rc));
        });
    }
    std::sort(raw_cuts.begin(), raw_cuts.end(), [](const RawCut& a, const RawCut& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.class_idx != b.class_idx) return a.class_idx < b.class_idx;
        return a.parts < b.parts;
    });

    const int num_types = static_cast<int>(tp.type_list.size());
    auto type_size = [&](int t) {
        int s = 0;
        for (int c : tp.type_list[t]) s += c;
        return s;
    };

    // Clusters: fair multisets of produced types with total size <= gamma
    std::vector<int> type_order(num_types);
    std::iota(type_order.begin(), type_order.end(), 0);
    std::vector<std::pair<int, int>> shape_counts;
    std::vector<int> shape_total(kappa, 0);
    std::function<void(int, int)> shapes_rec = [&](int ti, int used) {
        if (ti == num_types || used == gamma) {
            int total = 0;
            for (int c : shape_total) total += c;
            if (total == 0 || total % fairlet.size != 0) return;
            int d = total / fairlet.size;
            for (int i = 0; i < kappa; ++i)
                if (shape_total[i] != d * fairlet.counts[i]) return;

            TdProgram::ShapeVar sv{shape_counts, 0};
            long long sizes_sum = 0, sizes_sq = 0;
            for (auto [t, cnt] : shape_counts) {
                long long sz = type_size(t);
                sizes_sum += sz * cnt;
                sizes_sq += sz * sz * cnt;
            }
            // sum over unordered pairs of component instances of |A|*|B|
            sv.cost = (sizes_sum * sizes_sum - sizes_sq) / 2;
            tp.shapes.push_back(std::move(sv));
            return;
        }
        shapes_rec(ti + 1, used);
        int t = type_order[ti];
        int sz = type_size(t);
        int max_cnt = (gamma - used) / sz;
        for (int c = 1; c <= max_cnt; ++c) {
            shape_counts.emplace_back(t, c);
            for (int i = 0; i < kappa; ++i) shape_total[i] += c * tp.type_list[t][i];
            shapes_rec(ti + 1, used + c * sz);
            for (int i = 0; i < kappa; ++i) shape_total[i] -= c * tp.type_list[t][i];
            shape_counts.pop_back();
        }
    };
    shapes_rec(0, 0);

    // variable layout: cuts, comps, shapes
    int n_upper = 0;
    for (const auto& cls : classes)
        n_upper += static_cast<int>(cls.members.size() * cls.rep_colors.size());

    auto& prog = tp.program;
    for (const auto& rc : raw_cuts) {
        tp.cuts.push_back({rc.class_idx, rc.parts, rc.cost});
        prog.upper.push_back(static_cast<int>(classes[rc.class_idx].members.size()));
        prog.objective.push_back(rc.cost);
    }
    tp.comp_offset = static_cast<int>(prog.upper.size());
    for (int t = 0; t < num_types; ++t) {
        prog.upper.push_back(n_upper / std::max(1, type_size(t)));
        prog.objective.push_back(0);
    }
    tp.shape_offset = static_cast<int>(prog.upper.size());
    for (const auto& sv : tp.shapes) {
        int sz = 0;
        for (auto [t, cnt] : sv.counts) sz += type_size(t) * cnt;
        prog.upper.push_back(n_upper / std::max(1, sz));
        prog.objective.push_back(sv.cost);
    }

    // (1) each class's components are all cut some way
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        bip::Constraint cons;
        cons.rel = bip::Rel::Eq;
        cons.rhs = static_cast<long long>(classes[ci].members.size());
        for (std::size_t v = 0; v < raw_cuts.size(); ++v)
            if (raw_cuts[v].class_idx == static_cast<int>(ci))
                cons.terms.emplace_back(static_cast<int>(v), 1);
        prog.constraints.push_back(std::move(cons));
    }
    // (2) cutting produces the comp counts
    for (int t = 0; t < num_types; ++t) {
        bip::Constraint cons;
        cons.rel = bip::Rel::Eq;
        cons.rhs = 0;
        for (std::size_t v = 0; v < raw_cuts.size(); ++v) {
            auto it = raw_cuts[v].produces.find(t);
            if (it != raw_cuts[v].produces.end())
                cons.terms.emplace_back(static_cast<int>(v), it->second);
        }
        cons.terms.emplace_back(tp.comp_offset + t, -1);
        prog.constraints.push_back(std::move(cons));
    }
    // (3) clusters consume exactly the comp counts
    for (int t = 0; t < num_types; ++t) {
        bip::Constraint cons;
        cons.rel = bip::Rel::Eq;
        cons.rhs = 0;
        for (std::size_t sv = 0; sv < tp.shapes.size(); ++sv)
            for (auto [tt, cnt] : tp.shapes[sv].counts)
                if (tt == t) cons.terms.emplace_back(tp.shape_offset + static_cast<int>(sv), cnt);
        cons.terms.emplace_back(tp.comp_offset + t, -1);
        prog.constraints.push_back(std::move(cons));
    }
    // (4) the budget check as an explicit constraint when deciding
    if (budget) {
        bip::Constraint cons;
        cons.rel = bip::Rel::Le;
        cons.rhs = *budget;
        for (std::size_t v = 0; v < raw_cuts.size(); ++v)
            if (raw_cuts[v].cost != 0)
                cons.terms.emplace_back(static_cast<int>(v), raw_cuts[v].cost);
        for (std::size_t sv = 0; sv < tp.shapes.size(); ++sv)
            if (tp.shapes[sv].cost != 0)
                cons.terms.emplace_back(tp.shape_offset + static_cast<int>(sv),
                                        tp.shapes[sv].cost);
        prog.constraints.push_back(std::move(cons));
    }
    return tp;
}

namespace {

Clustering realize_clustering(const std::vector<ComponentClass>& classes, const TdProgram& tp,
                              const bip::Solution& sol) {
    // apply cuts member by member, pooling the parts by type
    std::map<std::vector<int>, std::vector<std::vector<int>>> pools;  // type -> parts (vertex sets)
    std::vector<std::size_t> next_member(classes.size(), 0);
    for (std::size_t v = 0; v < tp.cuts.size(); ++v) {
        const auto& cut = tp.cuts[v];
        for (int copy = 0; copy < sol.assignment[v]; ++copy) {
            const auto& member = classes[cut.class_idx].members[next_member[cut.class_idx]++];
            for (const auto& part : cut.parts) {
                std::vector<int> verts;
                std::vector<int> t(tp.type_list[0].size(), 0);
                for (int pos : part) {
                    verts.push_back(member[pos]);
                    ++t[classes[cut.class_idx].rep_colors[pos] - 1];
                }
                std::sort(verts.begin(), verts.end());
                pools[t].push_back(std::move(verts));
            }
        }
    }
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        assert(next_member[ci] == classes[ci].members.size());

    // assemble clusters shape by shape
    std::vector<std::vector<int>> clusters;
    for (std::size_t sv = 0; sv < tp.shapes.size(); ++sv) {
        int count = sol.assignment[tp.shape_offset + sv];
        for (int copy = 0; copy < count; ++copy) {
            std::vector<int> cluster;
            for (auto [t, cnt] : tp.shapes[sv].counts) {
                auto& pool = pools[tp.type_list[t]];
                for (int c = 0; c < cnt; ++c) {
                    assert(!pool.empty());
                    cluster.insert(cluster.end(), pool.back().begin(), pool.back().end());
                    pool.pop_back();
                }
            }
            clusters.push_back(std::move(cluster));
        }
    }
    for (const auto& [t, pool] : pools) assert(pool.empty());
    return Clustering::of(std::move(clusters));
}

}  // namespace

std::optional<SolveResult> solve_bounded_components(const ColoredInstance& graph, int gamma,
                                                    std::optional<int> budget, int zeta,
                                                    const Deadline* deadline) {
    FairletVector fairlet = compute_fairlet(graph);
    auto classes = component_classes(graph, zeta);
    TdProgram tp = build_program(classes, fairlet, std::min(gamma, graph.n()), budget);
    auto sol = bip::solve(tp.program, deadline);
    if (!sol) return std::nullopt;

    Clustering witness = realize_clustering(classes, tp, *sol);
    int cost = clustering_cost(graph, witness);
    assert(cost == sol->objective);
    assert(is_fair(witness, fairlet, graph.colors()));
    for (const auto& cl : witness.clusters)
        assert(static_cast<int>(cl.size()) <= gamma);
    return SolveResult{cost, std::move(witness)};
}

SolveResult solve_td(const ColoredInstance& instance, const TdParams& params) {
    FairletVector fairlet = compute_fairlet(instance);
    TreedepthForest forest =
        params.forest ? *params.forest
                      : treedepth_forest(instance,
                                         instance.n() <= params.exact_td_cap
                                             ? DecompMode::Exact
                                             : DecompMode::Heuristic,
                                         params.exact_td_cap);
    int gamma = params.gamma
                    ? *params.gamma
                    : std::min(instance.n(), max_cluster_size_bound(forest.height, fairlet.size));

    // the reduction itself does not depend on the budget, so it is shared by
    // every decision step of the binary search
    ReducedInstance red = reduce_by_types(instance, forest, gamma, std::nullopt);
    const int removed = static_cast<int>(red.removed.size());
    auto classes = component_classes(red.graph, params.zeta);
    TdProgram base = build_program(classes, fairlet, std::min(gamma, instance.n()),
                                   std::nullopt);

    auto decide = [&](int b) -> std::optional<SolveResult> {
        check_deadline(params.deadline);
        if (b < removed) return std::nullopt;  // reduction rejects: budget below zero
        TdProgram tp = base;
        bip::Constraint budget_cons;
        budget_cons.rel = bip::Rel::Le;
        budget_cons.rhs = b - removed;
        for (std::size_t v = 0; v < tp.cuts.size(); ++v)
            if (tp.cuts[v].cost != 0)
                budget_cons.terms.emplace_back(static_cast<int>(v), tp.cuts[v].cost);
        for (std::size_t sv = 0; sv < tp.shapes.size(); ++sv)
            if (tp.shapes[sv].cost != 0)
                budget_cons.terms.emplace_back(tp.shape_offset + static_cast<int>(sv),
                                               tp.shapes[sv].cost);
        tp.program.constraints.push_back(std::move(budget_cons));
        auto sol = bip::solve(tp.program, params.deadline);
        if (!sol) return std::nullopt;
        Clustering witness = realize_clustering(classes, tp, *sol);
        return SolveResult{clustering_cost(instance, witness), std::move(witness)};
    };

    int lo = 0, hi = instance.n() * (instance.n() - 1) / 2;
    if (gamma >= fairlet.size) {
        // the canonical fairlet tiling is a valid clustering within the size
        // cap, so its cost narrows the search range for free
        std::vector<std::vector<int>> buckets(instance.kappa());
        for (int v = 1; v <= instance.n(); ++v)
            buckets[instance.color(v) - 1].push_back(v);
        std::vector<std::size_t> next(instance.kappa(), 0);
        std::vector<std::vector<int>> tiles;
        for (int copy = 0; copy < instance.n() / fairlet.size; ++copy) {
            std::vector<int> cl;
            for (int i = 0; i < instance.kappa(); ++i)
                for (int j = 0; j < fairlet.counts[i]; ++j)
                    cl.push_back(buckets[i][next[i]++]);
            tiles.push_back(std::move(cl));
        }
        hi = std::min(hi, clustering_cost(instance, Clustering::of(std::move(tiles))));
    }
    std::optional<SolveResult> at_hi = decide(hi);
    if (!at_hi)
        throw ParamError("no fair clustering with clusters of size at most " +
                         std::to_string(gamma));
    std::optional<SolveResult> best = at_hi;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        auto r = decide(mid);
        if (r) {
            best = r;
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    // the realized witness at the threshold budget achieves the optimum
    assert(best && best->cost == lo);
    return *best;
}

}  // namespace fcc
