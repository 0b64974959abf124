#include "fcc/solver_tw.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace fcc {
namespace tw {

namespace {

void push_int(std::string& s, int x) {
    s.append(reinterpret_cast<const char*>(&x), sizeof(int));
}

std::string key_of(const Record& r) {
    std::string s;
    push_int(s, static_cast<int>(r.open.size()));
    for (const auto& [e, cnt] : r.open) {
        push_int(s, e.d);
        for (int c : e.colors) push_int(s, c);
        push_int(s, cnt);
    }
    push_int(s, -1);
    for (const auto& e : r.current) {
        push_int(s, e.d);
        for (int c : e.colors) push_int(s, c);
        push_int(s, static_cast<int>(e.bagset.size()));
        for (int v : e.bagset) push_int(s, v);
    }
    return s;
}

void normalize(Record& r) {
    std::sort(r.open.begin(), r.open.end());
    // merge equal open types
    std::vector<std::pair<OpenEntry, int>> merged;
    for (auto& p : r.open) {
        if (!merged.empty() && merged.back().first == p.first)
            merged.back().second += p.second;
        else
            merged.push_back(std::move(p));
    }
    r.open = std::move(merged);
    std::sort(r.current.begin(), r.current.end(),
              [](const CurrentEntry& a, const CurrentEntry& b) { return a.bagset < b.bagset; });
}

int color_count_in(const std::vector<int>& vertices, const ColoredInstance& g, int color) {
    int c = 0;
    for (int v : vertices)
        if (g.color(v) == color) ++c;
    return c;
}

}  // namespace

int Table::find(const Record& r) const {
    auto it = index.find(key_of(r));
    return it == index.end() ? -1 : it->second;
}

TwSolver::TwSolver(const ColoredInstance& instance, const NiceTreeDecomposition& nice,
                   Mode mode, const Deadline* deadline)
    : g_(instance), nice_(nice), mode_(mode), deadline_(deadline),
      fairlet_(compute_fairlet(instance)) {
    if (mode == Mode::Fpt2 && fairlet_.size > 2)
        throw ParamError("fpt2 solver requires fairlet size at most 2, got " +
                         std::to_string(fairlet_.size));
    int by_width = std::max(1, (24 * nice.width + fairlet_.size - 1) / fairlet_.size);
    dmax_ = std::min(g_.n() / fairlet_.size, by_width);
}

bool TwSolver::admissible(const Record& rec) const {
    // feasibility: the remaining demand of every tracked cluster must be
    // fillable by future vertices of the right colors; clusters are disjoint,
    // so the demands add up. Records violating this can never reach an
    // (empty, empty) root record and are dropped losslessly.
    const int kappa = g_.kappa();
    std::vector<int> demand(kappa, 0), past(kappa, 0), bag(kappa, 0);
    for (const auto& [e, cnt] : rec.open)
        for (int i = 0; i < kappa; ++i) {
            demand[i] += cnt * (fairlet_.counts[i] * e.d - e.colors[i]);
            past[i] += cnt * e.colors[i];
        }
    for (const auto& e : rec.current) {
        for (int i = 0; i < kappa; ++i) {
            demand[i] += fairlet_.counts[i] * e.d - e.colors[i];
            past[i] += e.colors[i];
        }
        for (int v : e.bagset) {
            int i = g_.color(v) - 1;
            ++bag[i];
            --demand[i];
        }
    }
    for (int i = 0; i < kappa; ++i) {
        int future = g_.color_counts()[i] - past[i] - bag[i];
        if (demand[i] > future) return false;
    }

    if (mode_ == Mode::Xp) return true;
    if (fairlet_.size == 1) return rec.open.empty();
    for (const auto& [e, cnt] : rec.open) {
        if (e.d != 1) return false;
        int total = 0;
        for (int c : e.colors) total += c;
        assert(total == 1);
    }
    return true;
}

void TwSolver::insert(Table& t, Record rec, Back back) const {
    if (!admissible(rec)) return;
    std::string key = key_of(rec);
    auto it = t.index.find(key);
    if (it == t.index.end()) {
        t.index.emplace(std::move(key), static_cast<int>(t.records.size()));
        t.records.push_back(std::move(rec));
        t.backs.push_back(std::move(back));
    } else if (rec.cost < t.records[it->second].cost) {
        t.records[it->second] = std::move(rec);
        t.backs[it->second] = std::move(back);
    }
}

Table TwSolver::leaf_table(int vertex) const {
    Table t;
    for (int d = 1; d <= dmax_; ++d) {
        Record r;
        r.current.push_back({d, std::vector<int>(g_.kappa(), 0), {vertex}});
        r.cost = 0;
        Back b;
        b.kind = Back::Kind::LeafInit;
        b.d = d;
        insert(t, std::move(r), std::move(b));
    }
    return t;
}

Table TwSolver::process_introduce(const Table& child, int vertex) const {
    Table t;
    const int chi = g_.color(vertex);
    for (std::size_t ri = 0; ri < child.records.size(); ++ri) {
        check_deadline(deadline_);
        const Record& r = child.records[ri];

        // v starts a new cluster
        for (int d = 1; d <= dmax_; ++d) {
            Record nr = r;
            nr.current.push_back({d, std::vector<int>(g_.kappa(), 0), {vertex}});
            normalize(nr);
            Back b;
            b.kind = Back::Kind::IntroNew;
            b.child = static_cast<int>(ri);
            b.d = d;
            insert(t, std::move(nr), std::move(b));
        }

        // v joins a current cluster with spare capacity for its color
        for (std::size_t j = 0; j < r.current.size(); ++j) {
            const CurrentEntry& e = r.current[j];
            int s_chi = color_count_in(e.bagset, g_, chi);
            if (s_chi + e.colors[chi - 1] >= fairlet_.counts[chi - 1] * e.d) continue;
            Record nr = r;
            auto& bs = nr.current[j].bagset;
            bs.insert(std::upper_bound(bs.begin(), bs.end(), vertex), vertex);
            normalize(nr);
            Back b;
            b.kind = Back::Kind::IntroJoinCurrent;
            b.child = static_cast<int>(ri);
            b.entry = static_cast<int>(j);
            insert(t, std::move(nr), std::move(b));
        }

        // v reopens an open cluster, making it current again
        for (std::size_t j = 0; j < r.open.size(); ++j) {
            const OpenEntry& e = r.open[j].first;
            if (e.colors[chi - 1] >= fairlet_.counts[chi - 1] * e.d) continue;
            Record nr = r;
            if (--nr.open[j].second == 0) nr.open.erase(nr.open.begin() + j);
            nr.current.push_back({e.d, e.colors, {vertex}});
            normalize(nr);
            Back b;
            b.kind = Back::Kind::IntroReopen;
            b.child = static_cast<int>(ri);
            b.entry = static_cast<int>(j);
            insert(t, std::move(nr), std::move(b));
        }
    }
    return t;
}

Table TwSolver::process_forget(const Table& child, int vertex,
                               const std::vector<int>& parent_bag) const {
    Table t;
    for (std::size_t ri = 0; ri < child.records.size(); ++ri) {
        check_deadline(deadline_);
        const Record& r = child.records[ri];
        int ei = -1;
        for (std::size_t j = 0; j < r.current.size(); ++j)
            if (std::binary_search(r.current[j].bagset.begin(), r.current[j].bagset.end(),
                                   vertex)) {
                ei = static_cast<int>(j);
                break;
            }
        assert(ei >= 0);
        const CurrentEntry& e = r.current[ei];

        int inc = 0;
        for (int u : e.bagset)
            if (u != vertex && !g_.has_edge(u, vertex)) ++inc;  // non-edges within S
        for (int u : parent_bag) {
            if (std::binary_search(e.bagset.begin(), e.bagset.end(), u)) continue;
            if (g_.has_edge(u, vertex)) ++inc;  // cut edges into the rest of the bag
        }
        int sumx = 0;
        for (int c : e.colors) sumx += c;
        inc += e.d * fairlet_.size - static_cast<int>(e.bagset.size()) - sumx;

        Record nr = r;
        CurrentEntry ne = e;
        ne.bagset.erase(std::find(ne.bagset.begin(), ne.bagset.end(), vertex));
        ne.colors[g_.color(vertex) - 1] += 1;
        bool full = true;
        for (int i = 1; i <= g_.kappa(); ++i)
            if (color_count_in(ne.bagset, g_, i) + ne.colors[i - 1] !=
                fairlet_.counts[i - 1] * ne.d) {
                full = false;
                break;
            }
        if (ne.bagset.empty()) {
            nr.current.erase(nr.current.begin() + ei);
            if (!full) nr.open.push_back({{ne.d, ne.colors}, 1});
            // a full cluster whose bag part emptied is complete: stop tracking it
        } else {
            nr.current[ei] = std::move(ne);
        }
        nr.cost += inc;
        normalize(nr);
        Back b;
        b.kind = Back::Kind::Forget;
        b.child = static_cast<int>(ri);
        insert(t, std::move(nr), std::move(b));
    }
    return t;
}

namespace {

std::string current_signature(const Record& r) {
    std::string s;
    for (const auto& e : r.current) {
        push_int(s, e.d);
        push_int(s, static_cast<int>(e.bagset.size()));
        for (int v : e.bagset) push_int(s, v);
    }
    return s;
}

}  // namespace

Table TwSolver::process_join(const Table& left, const Table& right) const {
    Table t;
    std::unordered_map<std::string, std::vector<int>> right_by_sig;
    for (std::size_t j = 0; j < right.records.size(); ++j)
        right_by_sig[current_signature(right.records[j])].push_back(static_cast<int>(j));

    for (std::size_t li = 0; li < left.records.size(); ++li) {
        const Record& p = left.records[li];
        auto it = right_by_sig.find(current_signature(p));
        if (it == right_by_sig.end()) continue;
        for (int qi : it->second) {
            check_deadline(deadline_);
            const Record& q = right.records[qi];

            // merge current entries pairwise (sorted by bagset on both sides)
            bool ok = true;
            std::vector<CurrentEntry> merged_cur;
            long long cur_sub = 0;
            merged_cur.reserve(p.current.size());
            for (std::size_t j = 0; j < p.current.size() && ok; ++j) {
                const CurrentEntry& a = p.current[j];
                const CurrentEntry& b = q.current[j];
                assert(a.bagset == b.bagset && a.d == b.d);
                CurrentEntry m = a;
                int suma = 0, sumb = 0;
                for (int i = 0; i < g_.kappa(); ++i) {
                    int s_i = color_count_in(a.bagset, g_, i + 1);
                    m.colors[i] = a.colors[i] + b.colors[i];
                    if (m.colors[i] + s_i > fairlet_.counts[i] * a.d) ok = false;
                    suma += a.colors[i];
                    sumb += b.colors[i];
                }
                cur_sub += static_cast<long long>(suma) * sumb;
                merged_cur.push_back(std::move(m));
            }
            if (!ok) continue;

            // branch over pairings of open entries with equal size guesses
            struct Pair {
                int a, b;
                OpenEntry merged;
                bool full;
                int sub;  // past-size product subtracted per merge
            };
            std::vector<Pair> pairs;
            for (std::size_t a = 0; a < p.open.size(); ++a)
                for (std::size_t b = 0; b < q.open.size(); ++b) {
                    const OpenEntry& ea = p.open[a].first;
                    const OpenEntry& eb = q.open[b].first;
                    if (ea.d != eb.d) continue;
                    OpenEntry m{ea.d, ea.colors};
                    bool fits = true, full = true;
                    int suma = 0, sumb = 0;
                    for (int i = 0; i < g_.kappa(); ++i) {
                        m.colors[i] += eb.colors[i];
                        if (m.colors[i] > fairlet_.counts[i] * m.d) fits = false;
                        if (m.colors[i] != fairlet_.counts[i] * m.d) full = false;
                        suma += ea.colors[i];
                        sumb += eb.colors[i];
                    }
                    if (!fits) continue;
                    pairs.push_back({static_cast<int>(a), static_cast<int>(b), std::move(m),
                                     full, suma * sumb});
                }

            std::vector<int> rem_a(p.open.size()), rem_b(q.open.size());
            for (std::size_t a = 0; a < p.open.size(); ++a) rem_a[a] = p.open[a].second;
            for (std::size_t b = 0; b < q.open.size(); ++b) rem_b[b] = q.open[b].second;
            std::vector<std::array<int, 3>> chosen;  // (pair a, pair b, merge count)

            auto emit_plan = [&](long long open_sub) {
                Record nr;
                nr.current = merged_cur;
                nr.cost = p.cost + q.cost - static_cast<int>(cur_sub + open_sub);
                for (std::size_t a = 0; a < p.open.size(); ++a)
                    if (rem_a[a] > 0) nr.open.push_back({p.open[a].first, rem_a[a]});
                for (std::size_t b = 0; b < q.open.size(); ++b)
                    if (rem_b[b] > 0) nr.open.push_back({q.open[b].first, rem_b[b]});
                for (const auto& [a, b, m] : chosen) {
                    const Pair& pr = *std::find_if(pairs.begin(), pairs.end(),
                                                   [&](const Pair& x) {
                                                       return x.a == a && x.b == b;
                                                   });
                    // fully merged clusters are complete and leave the table
                    if (!pr.full) nr.open.push_back({pr.merged, m});
                }
                normalize(nr);
                Back bk;
                bk.kind = Back::Kind::Join;
                bk.child = static_cast<int>(li);
                bk.child2 = qi;
                bk.merges = chosen;
                insert(t, std::move(nr), std::move(bk));
            };

            std::function<void(std::size_t, long long)> enumerate =
                [&](std::size_t pi, long long open_sub) {
                    if (pi == pairs.size()) {
                        emit_plan(open_sub);
                        return;
                    }
                    const Pair& pr = pairs[pi];
                    int cap = std::min(rem_a[pr.a], rem_b[pr.b]);
                    for (int m = 0; m <= cap; ++m) {
                        if (m > 0) {
                            rem_a[pr.a] -= m;
                            rem_b[pr.b] -= m;
                            chosen.push_back({pr.a, pr.b, m});
                        }
                        enumerate(pi + 1, open_sub + static_cast<long long>(m) * pr.sub);
                        if (m > 0) {
                            rem_a[pr.a] += m;
                            rem_b[pr.b] += m;
                            chosen.pop_back();
                        }
                    }
                };
            enumerate(0, 0);
        }
    }
    return t;
}

SolveResult TwSolver::solve() {
    validate_nice(g_, nice_);
    std::vector<Table> tables(nice_.nodes.size());
    for (std::size_t i = 0; i < nice_.nodes.size(); ++i) {
        const NiceNode& node = nice_.nodes[i];
        switch (node.kind) {
            case NiceNodeKind::Leaf:
                tables[i] = leaf_table(node.vertex);
                break;
            case NiceNodeKind::Introduce:
                tables[i] = process_introduce(tables[node.children[0]], node.vertex);
                break;
            case NiceNodeKind::Forget:
                tables[i] = process_forget(tables[node.children[0]], node.vertex, node.bag);
                break;
            case NiceNodeKind::Join:
                tables[i] = process_join(tables[node.children[0]], tables[node.children[1]]);
                break;
        }
    }

    const Table& root = tables[nice_.root];
    int best = -1;
    for (std::size_t i = 0; i < root.records.size(); ++i) {
        assert(root.records[i].current.empty());
        if (!root.records[i].open.empty()) continue;
        if (best < 0 || root.records[i].cost < root.records[best].cost)
            best = static_cast<int>(i);
    }
    assert(best >= 0 && "a fair clustering always exists");

    Clustering witness = reconstruct(tables, best);
    int cost = clustering_cost(g_, witness);
    assert(cost == root.records[best].cost);
    return {cost, std::move(witness)};
}

namespace {

struct Ids {
    std::vector<int> cur;                          // cluster id per current entry
    std::map<OpenEntry, std::vector<int>> pools;   // cluster ids per open type
};

int entry_index_with_vertex(const Record& r, int v) {
    for (std::size_t j = 0; j < r.current.size(); ++j)
        if (std::binary_search(r.current[j].bagset.begin(), r.current[j].bagset.end(), v))
            return static_cast<int>(j);
    return -1;
}

int entry_index_with_bagset(const Record& r, const std::vector<int>& s) {
    for (std::size_t j = 0; j < r.current.size(); ++j)
        if (r.current[j].bagset == s) return static_cast<int>(j);
    return -1;
}

}  // namespace

Clustering TwSolver::reconstruct(const std::vector<Table>& tables, int root_record) const {
    std::vector<int> assign(g_.n() + 1, -1);
    int next_id = 0;

    std::function<void(int, int, Ids)> walk = [&](int node_idx, int rec_idx, Ids ids) {
        const NiceNode& node = nice_.nodes[node_idx];
        const Record& rec = tables[node_idx].records[rec_idx];
        const Back& back = tables[node_idx].backs[rec_idx];

        auto map_child_cur = [&](const Record& child,
                                 const std::function<std::vector<int>(int)>& target_bagset) {
            std::vector<int> out(child.current.size(), -1);
            for (std::size_t j = 0; j < child.current.size(); ++j) {
                int pi = entry_index_with_bagset(rec, target_bagset(static_cast<int>(j)));
                assert(pi >= 0);
                out[j] = ids.cur[pi];
            }
            return out;
        };

        switch (back.kind) {
            case Back::Kind::LeafInit:
                return;

            case Back::Kind::IntroNew: {
                const Record& child = tables[node.children[0]].records[back.child];
                Ids cid;
                cid.pools = ids.pools;
                cid.cur = map_child_cur(
                    child, [&](int j) { return child.current[j].bagset; });
                walk(node.children[0], back.child, std::move(cid));
                return;
            }

            case Back::Kind::IntroJoinCurrent: {
                const Record& child = tables[node.children[0]].records[back.child];
                int v = node.vertex;
                Ids cid;
                cid.pools = ids.pools;
                cid.cur = map_child_cur(child, [&](int j) {
                    std::vector<int> s = child.current[j].bagset;
                    if (j == back.entry)
                        s.insert(std::upper_bound(s.begin(), s.end(), v), v);
                    return s;
                });
                walk(node.children[0], back.child, std::move(cid));
                return;
            }

            case Back::Kind::IntroReopen: {
                const Record& child = tables[node.children[0]].records[back.child];
                int v = node.vertex;
                int vi = entry_index_with_vertex(rec, v);
                assert(vi >= 0 && rec.current[vi].bagset.size() == 1);
                Ids cid;
                cid.pools = ids.pools;
                cid.pools[child.open[back.entry].first].push_back(ids.cur[vi]);
                cid.cur = map_child_cur(
                    child, [&](int j) { return child.current[j].bagset; });
                walk(node.children[0], back.child, std::move(cid));
                return;
            }

            case Back::Kind::Forget: {
                const Record& child = tables[node.children[0]].records[back.child];
                int v = node.vertex;
                int ei = entry_index_with_vertex(child, v);
                assert(ei >= 0);
                const CurrentEntry& e = child.current[ei];
                std::vector<int> s_after = e.bagset;
                s_after.erase(std::find(s_after.begin(), s_after.end(), v));
                std::vector<int> x_after = e.colors;
                x_after[g_.color(v) - 1] += 1;
                bool full = true;
                for (int i = 1; i <= g_.kappa(); ++i)
                    if (color_count_in(s_after, g_, i) + x_after[i - 1] !=
                        fairlet_.counts[i - 1] * e.d) {
                        full = false;
                        break;
                    }

                Ids cid;
                cid.pools = ids.pools;
                int id;
                if (s_after.empty() && full) {
                    id = next_id++;
                } else if (s_after.empty()) {
                    auto& pool = cid.pools[OpenEntry{e.d, x_after}];
                    assert(!pool.empty());
                    id = pool.back();
                    pool.pop_back();
                } else {
                    int pi = entry_index_with_bagset(rec, s_after);
                    assert(pi >= 0);
                    id = ids.cur[pi];
                }
                assign[v] = id;
                cid.cur.assign(child.current.size(), -1);
                for (std::size_t j = 0; j < child.current.size(); ++j) {
                    if (static_cast<int>(j) == ei) {
                        cid.cur[j] = id;
                    } else {
                        int pi = entry_index_with_bagset(rec, child.current[j].bagset);
                        assert(pi >= 0);
                        cid.cur[j] = ids.cur[pi];
                    }
                }
                walk(node.children[0], back.child, std::move(cid));
                return;
            }

            case Back::Kind::Join: {
                const Record& lrec = tables[node.children[0]].records[back.child];
                const Record& rrec = tables[node.children[1]].records[back.child2];
                Ids lid, rid;
                lid.cur = map_child_cur(lrec, [&](int j) { return lrec.current[j].bagset; });
                rid.cur = map_child_cur(rrec, [&](int j) { return rrec.current[j].bagset; });

                auto pools = ids.pools;
                for (const auto& [a, b, m] : back.merges) {
                    const OpenEntry& ea = lrec.open[a].first;
                    const OpenEntry& eb = rrec.open[b].first;
                    OpenEntry merged{ea.d, ea.colors};
                    bool full = true;
                    for (int i = 0; i < g_.kappa(); ++i) {
                        merged.colors[i] += eb.colors[i];
                        if (merged.colors[i] != fairlet_.counts[i] * merged.d) full = false;
                    }
                    for (int c = 0; c < m; ++c) {
                        int id;
                        if (full) {
                            id = next_id++;
                        } else {
                            auto& pool = pools[merged];
                            assert(!pool.empty());
                            id = pool.back();
                            pool.pop_back();
                        }
                        lid.pools[ea].push_back(id);
                        rid.pools[eb].push_back(id);
                    }
                }
                auto leftover = [&](const Record& side, Ids& sid,
                                    const std::function<int(int)>& merged_count) {
                    for (std::size_t a = 0; a < side.open.size(); ++a) {
                        int rem = side.open[a].second - merged_count(static_cast<int>(a));
                        for (int c = 0; c < rem; ++c) {
                            auto& pool = pools[side.open[a].first];
                            assert(!pool.empty());
                            sid.pools[side.open[a].first].push_back(pool.back());
                            pool.pop_back();
                        }
                    }
                };
                leftover(lrec, lid, [&](int a) {
                    int c = 0;
                    for (const auto& [x, y, m] : back.merges)
                        if (x == a) c += m;
                    return c;
                });
                leftover(rrec, rid, [&](int b) {
                    int c = 0;
                    for (const auto& [x, y, m] : back.merges)
                        if (y == b) c += m;
                    return c;
                });
                for (const auto& [type, pool] : pools) assert(pool.empty());

                walk(node.children[0], back.child, std::move(lid));
                walk(node.children[1], back.child2, std::move(rid));
                return;
            }
        }
    };

    Ids root_ids;  // root record has empty open and current
    walk(nice_.root, root_record, std::move(root_ids));

    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= g_.n(); ++v) {
        assert(assign[v] >= 0);
        groups[assign[v]].push_back(v);
    }
    std::vector<std::vector<int>> parts;
    parts.reserve(groups.size());
    for (auto& [id, vs] : groups) parts.push_back(std::move(vs));
    return Clustering::of(std::move(parts));
}

}  // namespace tw

SolveResult solve_tw_xp(const ColoredInstance& instance, const NiceTreeDecomposition& nice,
                        const Deadline* deadline) {
    return tw::TwSolver(instance, nice, tw::Mode::Xp, deadline).solve();
}

SolveResult solve_tw_fpt2(const ColoredInstance& instance, const NiceTreeDecomposition& nice,
                          const Deadline* deadline) {
    return tw::TwSolver(instance, nice, tw::Mode::Fpt2, deadline).solve();
}

}  // namespace fcc
