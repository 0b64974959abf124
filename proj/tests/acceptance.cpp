// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are pinned in code; run times are wall clock.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "fcc/bench.hpp"
#include "fcc/bip.hpp"
#include "fcc/core.hpp"
#include "fcc/decomp.hpp"
#include "fcc/generate.hpp"
#include "fcc/io.hpp"
#include "fcc/oracle.hpp"
#include "fcc/solver_td.hpp"
#include "fcc/solver_tw.hpp"
#include "fcc/solver_vc.hpp"
#include "helpers.hpp"

using namespace fcc;
using namespace fcc::testing;

namespace {

int criteria_failed = 0;

void report(int idx, bool pass, const std::string& text) {
    std::printf("[%d/8] %s  %s\n", idx, pass ? "PASS" : "FAIL", text.c_str());
    std::fflush(stdout);
    if (!pass) ++criteria_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

NiceTreeDecomposition nice_of(const ColoredInstance& g) {
    return to_nice(tree_decomposition(g, DecompMode::Exact), g);
}

struct SolveFn {
    std::string name;
    std::function<int(const ColoredInstance&)> run;
};

std::vector<SolveFn> solver_set(bool include_fpt2) {
    std::vector<SolveFn> fns;
    fns.push_back({"oracle", [](const ColoredInstance& g) {
                       OracleParams p;
                       p.cap = 12;
                       return brute_force_optimum(g, p).cost;
                   }});
    fns.push_back({"vc", [](const ColoredInstance& g) { return solve_vc(g).cost; }});
    fns.push_back({"tw-xp", [](const ColoredInstance& g) {
                       return solve_tw_xp(g, nice_of(g)).cost;
                   }});
    if (include_fpt2)
        fns.push_back({"tw-fpt2", [](const ColoredInstance& g) {
                           return solve_tw_fpt2(g, nice_of(g)).cost;
                       }});
    fns.push_back({"td", [](const ColoredInstance& g) { return solve_td(g).cost; }});
    return fns;
}

// ---- criterion 1: demo-instance reproduction ------------------------------

void criterion_1(const std::string& data_dir) {
    auto fair = load_instance(data_dir + "/fig1.fcc");
    auto mono = load_instance(data_dir + "/fig1_mono.fcc");

    bool pass = true;
    std::ostringstream note;
    note << "fig1 reproduction:";

    for (const auto& s : solver_set(false)) {
        auto t0 = std::chrono::steady_clock::now();
        int cost = s.run(fair);
        double secs = seconds_since(t0);
        note << " fair/" << s.name << "=" << cost;
        if (cost != 9) pass = false;
        if (secs >= 10.0) {
            pass = false;
            note << "(slow " << secs << "s)";
        }
    }
    for (const auto& s : solver_set(true)) {
        auto t0 = std::chrono::steady_clock::now();
        int cost = s.run(mono);
        double secs = seconds_since(t0);
        note << " mono/" << s.name << "=" << cost;
        if (cost != 4) pass = false;
        if (secs >= 10.0) {
            pass = false;
            note << "(slow " << secs << "s)";
        }
    }
    if (!pass)
        note << "  [expected fair=9 mono=4; every solver and exhaustive enumeration put "
                "the fair optimum of the shipped edge list at 8, witnessed by "
                "{1,2,5},{3,4,9},{6,7,8}, so the pinned value 9 is not attainable for "
                "this instance]";
    report(1, pass, note.str());
}

// ---- criteria 2, 4, 5: exhaustive small sweep ------------------------------

struct SweepOutcome {
    bool solvers_agree = true;
    bool size_cap_holds = true;
    bool nice_holds = true;
    long long instances = 0;
    long long nice_checked = 0;
    std::string first_mismatch;
};

void sweep_instance(const ColoredInstance& g, SweepOutcome& out, bool check_nice) {
    auto fairlet = compute_fairlet(g);
    int oracle_cost = brute_force_optimum(g).cost;

    for (const auto& s : solver_set(fairlet.size <= 2)) {
        if (s.name == "oracle") continue;
        int c = s.run(g);
        if (c != oracle_cost) {
            out.solvers_agree = false;
            if (out.first_mismatch.empty())
                out.first_mismatch = s.name + " got " + std::to_string(c) + " vs oracle " +
                                     std::to_string(oracle_cost) + " on\n" +
                                     write_instance(g);
        }
    }

    // cluster-size cap from the exact treewidth never loses the optimum
    int tw = tree_decomposition(g, DecompMode::Exact).width();
    OracleParams capped;
    capped.max_cluster_size = max_cluster_size_bound(tw, fairlet.size);
    if (brute_force_optimum(g, capped).cost != oracle_cost) out.size_cap_holds = false;

    if (check_nice && fairlet.size == 2) {
        auto nice = find_nice_optimum(g);
        if (!nice || clustering_cost(g, *nice) != oracle_cost) out.nice_holds = false;
        ++out.nice_checked;
    }
    ++out.instances;
}

void criteria_2_4_5(SweepOutcome& out) {
    // all non-isomorphic graphs with n <= 6 crossed with balanced 2-colorings;
    // balanced colorings require even n, so the n <= 7 range of the
    // connected-cluster property is covered by the same instances
    for (int n : {2, 4, 6}) {
        for (const auto& edges : nonisomorphic_graphs(n)) {
            colorings_with_counts(n, {n / 2, n / 2}, [&](const std::vector<int>& colors) {
                sweep_instance(ColoredInstance::create(n, edges, colors, 2), out, true);
            });
        }
    }
    // (2,1)-colorings where 3 divides n
    for (int n : {3, 6}) {
        for (const auto& edges : nonisomorphic_graphs(n)) {
            colorings_with_counts(n, {2 * n / 3, n / 3}, [&](const std::vector<int>& colors) {
                sweep_instance(ColoredInstance::create(n, edges, colors, 2), out, false);
            });
        }
    }
}

// ---- criterion 3: randomized sweep -----------------------------------------

void criterion_3() {
    Rng rng(20240811);
    bool pass = true;
    std::string detail;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<std::vector<int>> fairlets{{1}, {1, 1}, {2, 1}};
        auto fl = fairlets[iter % 3];
        int ctilde = std::accumulate(fl.begin(), fl.end(), 0);
        int n = ctilde * static_cast<int>(1 + rng.below(8 / ctilde));
        std::vector<Family> fams{Family::Gnp, Family::Tree, Family::KTree,
                                 Family::StarForest};
        GenSpec spec{fams[rng.below(4)], n, 0.15 + 0.7 * rng.unit(), 2, fl, rng.next()};
        auto g = generate(spec);
        int oracle_cost = brute_force_optimum(g).cost;
        for (const auto& s : solver_set(ctilde <= 2)) {
            if (s.name == "oracle") continue;
            int c = s.run(g);
            if (c != oracle_cost) {
                pass = false;
                if (detail.empty())
                    detail = "; first mismatch: " + s.name + "=" + std::to_string(c) +
                             " oracle=" + std::to_string(oracle_cost) + " at iter " +
                             std::to_string(iter);
            }
        }
    }
    report(3, pass,
           "randomized sweep: 500 seeded instances, n <= 8, fairlets {1},(1,1),(2,1); "
           "all solver costs equal the oracle" +
               detail);
}

// ---- criterion 6: reduction decision equivalence ---------------------------

void criterion_6() {
    Rng rng(616161);
    bool pass = true;
    std::string detail;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::vector<int>> fairlets{{1}, {1, 1}, {2, 1}};
        auto fl = fairlets[iter % 3];
        int ctilde = std::accumulate(fl.begin(), fl.end(), 0);
        int n = ctilde * static_cast<int>(1 + rng.below(8 / ctilde));
        std::vector<Family> fams{Family::Gnp, Family::Tree, Family::StarForest};
        auto g = generate({fams[rng.below(3)], n, 0.15 + 0.6 * rng.unit(), 2, fl,
                           rng.next()});
        auto forest = treedepth_forest(g, DecompMode::Exact);
        int gamma = 1 + static_cast<int>(iter % 3);
        int budget = static_cast<int>(rng.below(n * (n - 1) / 2 + 1));

        auto red = reduce_by_types(g, forest, gamma, budget);
        OracleParams capped;
        capped.max_cluster_size = gamma;
        auto decide = [&](const ColoredInstance& h, int b) {
            bool yes = false;
            enumerate_fair_clusterings(h, capped, [&](const Clustering& c) {
                if (clustering_cost(h, c) <= b) {
                    yes = true;
                    return false;
                }
                return true;
            });
            return yes;
        };
        bool lhs = decide(g, budget);
        bool rhs = red.rejected ? false : decide(red.graph, *red.budget_after);
        if (lhs != rhs) {
            pass = false;
            if (detail.empty())
                detail = "; first mismatch at iter " + std::to_string(iter) + " gamma " +
                         std::to_string(gamma) + " budget " + std::to_string(budget);
        }
    }
    report(6, pass,
           "type-reduction equivalence: 200 seeded instances, forced gamma in {1,2,3}; "
           "size-capped oracle decision identical on (G,B) and (G',B')" +
               detail);
}

// ---- criterion 7: bounded-component ILP pipeline ---------------------------

std::optional<bip::Solution> grid_solve(const bip::Program& p) {
    std::optional<bip::Solution> best;
    std::vector<int> x(p.upper.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            for (const auto& cons : p.constraints) {
                long long s = 0;
                for (auto [j, a] : cons.terms) s += a * x[j];
                if (cons.rel == bip::Rel::Eq && s != cons.rhs) return;
                if (cons.rel == bip::Rel::Le && s > cons.rhs) return;
                if (cons.rel == bip::Rel::Ge && s < cons.rhs) return;
            }
            long long obj = 0;
            for (std::size_t j = 0; j < x.size(); ++j) obj += p.objective[j] * x[j];
            if (!best || obj < best->objective) best = bip::Solution{obj, x};
            return;
        }
        for (x[i] = 0; x[i] <= p.upper[i]; ++x[i]) rec(i + 1);
        x[i] = 0;
    };
    rec(0);
    return best;
}

void criterion_7() {
    Rng rng(777777);
    bool pass = true;
    std::string detail;

    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::pair<int, int>> edges;
        int n = 0;
        for (int c = 0; c < 4; ++c) {
            int s = 1 + static_cast<int>(rng.below(4));
            if (n + s > 9) break;
            for (int u = n + 1; u <= n + s; ++u)
                for (int v = u + 1; v <= n + s; ++v)
                    if (rng.unit() < 0.55) edges.emplace_back(u, v);
            for (int u = n + 1; u + 1 <= n + s; ++u)
                if (!std::count(edges.begin(), edges.end(), std::make_pair(u, u + 1)))
                    edges.emplace_back(u, u + 1);
            n += s;
        }
        if (n % 2) {
            edges.emplace_back(n, n + 1);
            n += 1;
        }
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng.below(2));
        int blues = static_cast<int>(std::count(colors.begin(), colors.end(), 1));
        for (int v = 0; blues != n / 2 && v < n; ++v) {
            if (blues > n / 2 && colors[v] == 1) { colors[v] = 2; --blues; }
            else if (blues < n / 2 && colors[v] == 2) { colors[v] = 1; ++blues; }
        }
        auto g = ColoredInstance::create(n, edges, colors, 2);
        auto got = solve_bounded_components(g, g.n(), std::nullopt, 8);
        int want = brute_force_optimum(g).cost;
        if (!got || got->cost != want) {
            pass = false;
            if (detail.empty()) detail = "; pipeline mismatch at iter " + std::to_string(iter);
        }
    }

    for (int iter = 0; iter < 200; ++iter) {
        bip::Program p;
        int nv = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < nv; ++i) {
            p.upper.push_back(static_cast<int>(rng.below(6)));
            p.objective.push_back(static_cast<int>(rng.below(11)) - 3);
        }
        int nc = 1 + static_cast<int>(rng.below(4));
        for (int c = 0; c < nc; ++c) {
            bip::Constraint cons;
            for (int i = 0; i < nv; ++i) {
                int a = static_cast<int>(rng.below(7)) - 3;
                if (a != 0) cons.terms.emplace_back(i, a);
            }
            cons.rel = static_cast<bip::Rel>(rng.below(3));
            cons.rhs = static_cast<int>(rng.below(13)) - 3;
            p.constraints.push_back(std::move(cons));
        }
        auto got = bip::solve(p);
        auto want = grid_solve(p);
        if (got.has_value() != want.has_value() ||
            (got && got->objective != want->objective)) {
            pass = false;
            if (detail.empty()) detail = "; bip/grid mismatch at iter " + std::to_string(iter);
        }
    }
    report(7, pass,
           "bounded-component ILP: 100 seeded instances equal the oracle; bip equals "
           "grid search on 200 random programs" +
               detail);
}

// ---- criterion 8: structural unit suites -----------------------------------

void criterion_8(const std::string& data_dir) {
    bool pass = true;
    std::string detail;
    Rng rng(888888);

    for (int iter = 0; iter < 1000; ++iter) {
        int n = 2 + static_cast<int>(rng.below(9));
        auto g = generate({Family::Gnp, n, rng.unit(), 2, {1}, rng.next()});
        std::vector<std::vector<int>> parts;
        for (int v = 1; v <= n; ++v) {
            std::size_t c = rng.below(parts.size() + 1);
            if (c == parts.size()) parts.push_back({});
            parts[c].push_back(v);
        }
        Clustering cl = Clustering::of(parts);
        if (clustering_cost(g, cl) != cost_from_pair_counts(g, cl)) {
            pass = false;
            detail += "; pair-count identity broke";
            break;
        }
    }

    for (int iter = 0; iter < 500 && pass; ++iter) {
        int n = 2 + static_cast<int>(rng.below(9));
        auto g = generate({Family::Gnp, n, 0.1 + 0.6 * rng.unit(), 2, {1}, rng.next()});
        try {
            auto ex = tree_decomposition(g, DecompMode::Exact);
            validate_tree_decomposition(g, ex);
            auto he = tree_decomposition(g, DecompMode::Heuristic);
            validate_tree_decomposition(g, he);
            validate_nice(g, to_nice(ex, g));
            validate_nice(g, to_nice(he, g));
            validate_treedepth_forest(g, treedepth_forest(g, DecompMode::Exact));
            validate_treedepth_forest(g, treedepth_forest(g, DecompMode::Heuristic));
            if (ex.width() > he.width()) throw ValidationError("exact width above heuristic");
        } catch (const Error& e) {
            pass = false;
            detail += std::string("; decomposition invariant broke: ") + e.what();
        }
    }

    int files = 0;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(data_dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".fcc") continue;
        ++files;
        auto g = load_instance(entry.path().string());
        std::string text = write_instance(g);
        std::istringstream in(text);
        auto h = parse_instance(in);
        if (write_instance(h) != text || h.edges() != g.edges() ||
            h.colors() != g.colors()) {
            pass = false;
            detail += "; round-trip broke on " + entry.path().string();
        }
    }
    if (files < 3) {
        pass = false;
        detail += "; corpus missing";
    }

    report(8, pass,
           "structural suites: pair-count identity x1000, decomposition invariants x500, "
           "corpus round-trip (" +
               std::to_string(files) + " files)" + detail);
}

}  // namespace

int main() {
    std::string data_dir = FCC_DATA_DIR;
    auto t0 = std::chrono::steady_clock::now();

    criterion_1(data_dir);

    SweepOutcome sweep;
    auto t_sweep = std::chrono::steady_clock::now();
    criteria_2_4_5(sweep);
    double sweep_secs = seconds_since(t_sweep);
    {
        std::ostringstream note;
        note << "exhaustive sweep: " << sweep.instances
             << " instances (all non-isomorphic graphs n <= 6, balanced and (2,1) "
                "colorings); every solver equals the oracle";
        if (!sweep.first_mismatch.empty()) note << "; " << sweep.first_mismatch;
        note << " [" << static_cast<int>(sweep_secs) << "s]";
        report(2, sweep.solvers_agree && sweep_secs < 1800.0, note.str());
    }
    criterion_3();
    report(4, sweep.size_cap_holds,
           "cluster-size cap max(24*tw, fairlet) preserves the oracle optimum across the "
           "exhaustive sweep");
    {
        std::ostringstream note;
        note << "a connected-cluster optimum exists and matches the oracle on all "
             << sweep.nice_checked << " balanced instances of the sweep";
        report(5, sweep.nice_holds && sweep.nice_checked > 0, note.str());
    }
    criterion_6();
    criterion_7();
    criterion_8(data_dir);

    std::printf("acceptance: %d/8 criteria passed in %.1fs\n", 8 - criteria_failed,
                seconds_since(t0));
    return criteria_failed == 0 ? 0 : 1;
}
