#include "fcc/report.hpp"

#include <chrono>
#include <sstream>

#include "fcc/core.hpp"
#include "fcc/decomp.hpp"
#include "fcc/io.hpp"
#include "fcc/solver_td.hpp"
#include "fcc/solver_tw.hpp"
#include "fcc/solver_vc.hpp"

namespace fcc {

Algo algo_from_string(const std::string& s) {
    if (s == "oracle") return Algo::Oracle;
    if (s == "vc") return Algo::Vc;
    if (s == "tw-xp") return Algo::TwXp;
    if (s == "tw-fpt2") return Algo::TwFpt2;
    if (s == "td") return Algo::Td;
    throw ParamError("unknown algorithm '" + s + "' (expected oracle|vc|tw-xp|tw-fpt2|td)");
}

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Oracle: return "oracle";
        case Algo::Vc: return "vc";
        case Algo::TwXp: return "tw-xp";
        case Algo::TwFpt2: return "tw-fpt2";
        case Algo::Td: return "td";
    }
    return "?";
}

SolutionReport run_solver(const ColoredInstance& instance, Algo algo,
                          const SolveOptions& options) {
    std::optional<Deadline> deadline;
    if (options.timeout_s) deadline.emplace(*options.timeout_s);
    const Deadline* dl = deadline ? &*deadline : nullptr;

    FairletVector fairlet = compute_fairlet(instance);
    SolutionReport rep;
    rep.solver = algo_name(algo);
    rep.parameters["ctilde"] = fairlet.size;
    rep.parameters["kappa"] = instance.kappa();

    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    switch (algo) {
        case Algo::Oracle: {
            OracleParams op;
            op.cap = options.oracle_cap;
            op.deadline = dl;
            result = brute_force_optimum(instance, op);
            break;
        }
        case Algo::Vc: {
            result = solve_vc(instance, dl);
            rep.parameters["k"] = min_vertex_cover(instance).k;
            break;
        }
        case Algo::TwXp:
        case Algo::TwFpt2: {
            RawTreeDecomposition raw;
            if (options.decomposition_file) {
                raw = load_pace_td(*options.decomposition_file);
                validate_tree_decomposition(instance, raw);
            } else {
                raw = tree_decomposition(instance,
                                         instance.n() <= options.exact_decomp_cap
                                             ? DecompMode::Exact
                                             : DecompMode::Heuristic,
                                         options.exact_decomp_cap);
            }
            NiceTreeDecomposition nice = to_nice(raw, instance);
            rep.parameters["width"] = nice.width;
            result = algo == Algo::TwXp ? solve_tw_xp(instance, nice, dl)
                                        : solve_tw_fpt2(instance, nice, dl);
            break;
        }
        case Algo::Td: {
            TdParams tp;
            tp.gamma = options.gamma;
            tp.deadline = dl;
            tp.exact_td_cap = options.exact_decomp_cap;
            TreedepthForest forest;
            if (options.decomposition_file) {
                forest = load_forest(*options.decomposition_file, instance.n());
                validate_treedepth_forest(instance, forest);
                tp.forest = &forest;
            }
            result = solve_td(instance, tp);
            if (!options.decomposition_file)
                forest = treedepth_forest(instance,
                                          instance.n() <= tp.exact_td_cap
                                              ? DecompMode::Exact
                                              : DecompMode::Heuristic,
                                          tp.exact_td_cap);
            rep.parameters["height"] = forest.height;
            rep.parameters["gamma"] =
                options.gamma ? *options.gamma
                              : std::min(instance.n(),
                                         max_cluster_size_bound(forest.height, fairlet.size));
            break;
        }
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    rep.cost = result.cost;
    rep.clusters = result.clustering.clusters;
    rep.fair = is_fair(result.clustering, fairlet, instance.colors());
    rep.budget = options.budget ? options.budget : instance.budget();
    if (rep.budget) rep.within_budget = rep.cost <= *rep.budget;
    return rep;
}

nlohmann::json report_to_json(const SolutionReport& report) {
    nlohmann::json j;
    j["solver"] = report.solver;
    j["parameters"] = report.parameters;
    j["cost"] = report.cost;
    j["clusters"] = report.clusters;
    j["fair"] = report.fair;
    j["wall_seconds"] = report.wall_seconds;
    if (report.budget) {
        j["budget"] = *report.budget;
        j["within_budget"] = *report.within_budget;
    }
    return j;
}

SolutionReport report_from_json(const nlohmann::json& j) {
    SolutionReport r;
    r.solver = j.at("solver").get<std::string>();
    r.parameters = j.at("parameters").get<std::map<std::string, int>>();
    r.cost = j.at("cost").get<int>();
    r.clusters = j.at("clusters").get<std::vector<std::vector<int>>>();
    r.fair = j.at("fair").get<bool>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    if (j.contains("budget")) {
        r.budget = j.at("budget").get<int>();
        r.within_budget = j.at("within_budget").get<bool>();
    }
    return r;
}

bool verify_report(const ColoredInstance& instance, const SolutionReport& report) {
    Clustering c = Clustering::of(report.clusters);
    try {
        validate_partition(instance, c);
    } catch (const ValidationError&) {
        return false;
    }
    if (!is_fair(c, compute_fairlet(instance), instance.colors())) return false;
    if (clustering_cost(instance, c) != report.cost) return false;
    if (report.budget && report.within_budget != (report.cost <= *report.budget)) return false;
    return true;
}

std::string format_report_text(const SolutionReport& report) {
    std::ostringstream os;
    os << "solver: " << report.solver << "\n";
    os << "parameters:";
    for (const auto& [k, v] : report.parameters) os << " " << k << "=" << v;
    os << "\n";
    os << "cost: " << report.cost << "\n";
    os << "fair: " << (report.fair ? "yes" : "no") << "\n";
    os << "clusters:" << "\n";
    for (const auto& cl : report.clusters) {
        os << " ";
        for (std::size_t i = 0; i < cl.size(); ++i) os << " " << cl[i];
        os << "\n";
    }
    if (report.budget)
        os << "decision: cost " << report.cost << (*report.within_budget ? " <= " : " > ")
           << "budget " << *report.budget << " -> " << (*report.within_budget ? "YES" : "NO")
           << "\n";
    os << "wall_seconds: " << report.wall_seconds << "\n";
    return os.str();
}

}  // namespace fcc
