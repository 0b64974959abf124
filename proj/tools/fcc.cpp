#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fcc/bench.hpp"
#include "fcc/core.hpp"
#include "fcc/generate.hpp"
#include "fcc/io.hpp"
#include "fcc/report.hpp"

namespace {

// exit codes: 0 ok / decision YES, 1 generic error, 2 budget exceeded,
// 3 precondition failure, 4 timeout
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTimeout = 4;

int cmd_solve(const std::string& path, const std::string& algo_s, fcc::SolveOptions opts,
              const std::string& json_out) {
    auto instance = fcc::load_instance(path);
    auto algo = fcc::algo_from_string(algo_s);
    auto report = fcc::run_solver(instance, algo, opts);
    std::cout << fcc::format_report_text(report);
    if (!json_out.empty()) {
        auto j = fcc::report_to_json(report);
        if (json_out == "-") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream out(json_out);
            if (!out) throw fcc::Error("cannot write " + json_out);
            out << j.dump(2) << "\n";
        }
    }
    if (report.within_budget && !*report.within_budget) return kExitBudget;
    return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& kind, const std::string& mode_s,
                  const std::string& out_path) {
    auto instance = fcc::load_instance(path);
    auto mode = mode_s == "exact" ? fcc::DecompMode::Exact : fcc::DecompMode::Heuristic;
    std::string text;
    if (kind == "tw") {
        auto td = fcc::tree_decomposition(instance, mode);
        text = fcc::write_pace_td(td, instance.n());
    } else if (kind == "td") {
        auto f = fcc::treedepth_forest(instance, mode);
        text = fcc::write_forest(f);
    } else {
        throw fcc::ParamError("unknown decomposition kind '" + kind + "' (expected tw|td)");
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw fcc::Error("cannot write " + out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_gen(const std::string& family, int n, double p, int k, const std::string& fairlet_s,
            std::uint64_t seed, const std::string& out_path) {
    fcc::GenSpec spec;
    spec.family = fcc::family_from_string(family);
    spec.n = n;
    spec.p = p;
    spec.k = k;
    spec.seed = seed;
    std::stringstream ss(fairlet_s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) spec.fairlet.push_back(std::stoi(tok));
    auto instance = fcc::generate(spec);
    if (out_path.empty()) {
        std::cout << fcc::write_instance(instance);
    } else {
        fcc::save_instance(instance, out_path);
    }
    return kExitOk;
}

int cmd_bench(const std::string& dir, const std::string& algos_s, double timeout, int jobs,
              int oracle_cap, const std::string& out_path) {
    fcc::BenchOptions opts;
    opts.timeout_s = timeout;
    opts.jobs = jobs;
    opts.oracle_cap = oracle_cap;
    if (!algos_s.empty()) {
        opts.algos.clear();
        std::stringstream ss(algos_s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) opts.algos.push_back(fcc::algo_from_string(tok));
    }
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".fcc")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw fcc::Error("no .fcc instances under " + dir);

    auto result = fcc::run_bench(files, opts);
    std::string tsv = result.to_tsv();
    if (out_path.empty()) {
        std::cout << tsv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw fcc::Error("cannot write " + out_path);
        out << tsv;
    }
    std::cout << "agreement: " << (result.all_agree ? "all costs agree" : "MISMATCH")
              << "\n";
    return result.all_agree ? kExitOk : kExitError;
}

int cmd_verify(const std::string& path, const std::string& report_path,
               std::optional<int> budget) {
    auto instance = fcc::load_instance(path);
    std::ifstream in(report_path);
    if (!in) throw fcc::Error("cannot open " + report_path);
    auto report = fcc::report_from_json(nlohmann::json::parse(in));
    if (budget) {
        report.budget = budget;
        report.within_budget = report.cost <= *budget;
    }
    bool ok = fcc::verify_report(instance, report);
    if (!ok) {
        std::cout << "verification FAILED\n";
        return kExitBudget;
    }
    fcc::Clustering c = fcc::Clustering::of(report.clusters);
    if (budget && !fcc::verify_solution(instance, c, *budget)) {
        std::cout << "verification FAILED: cost above budget\n";
        return kExitBudget;
    }
    std::cout << "verification OK: fair, cost " << report.cost;
    if (budget) std::cout << " within budget " << *budget;
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for fair correlation clustering"};
    app.require_subcommand(1);

    // solve
    std::string in_path, algo = "oracle", td_file, json_out;
    int budget = -1, gamma = -1, oracle_cap = 12;
    double timeout = 0;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("instance", in_path, "instance file")->required();
    solve->add_option("--algo", algo, "oracle|vc|tw-xp|tw-fpt2|td")->required();
    solve->add_option("--budget", budget, "decision budget B");
    solve->add_option("--td-file", td_file,
                      "decomposition file (PACE bags for tw-*, parent list for td)");
    solve->add_option("--gamma", gamma, "cluster size cap override (td solver)");
    solve->add_option("--oracle-cap", oracle_cap, "oracle size cap");
    solve->add_option("--timeout", timeout, "wall clock limit in seconds");
    solve->add_option("--json", json_out, "write the report as JSON ('-' for stdout)");

    // decompose
    std::string d_path, d_kind = "tw", d_mode = "exact", d_out;
    auto* dec = app.add_subcommand("decompose", "compute a decomposition");
    dec->add_option("instance", d_path, "instance file")->required();
    dec->add_option("--kind", d_kind, "tw|td");
    dec->add_option("--mode", d_mode, "exact|heuristic");
    dec->add_option("--out", d_out, "output file (default stdout)");

    // gen
    std::string g_family = "gnp", g_fairlet = "1,1", g_out;
    int g_n = 8, g_k = 2;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", g_family, "gnp|tree|ktree|star-forest")->required();
    gen->add_option("--n", g_n, "vertex count")->required();
    gen->add_option("--p", g_p, "edge probability (gnp)");
    gen->add_option("--k", g_k, "clique parameter (ktree)");
    gen->add_option("--fairlet", g_fairlet, "fairlet vector, e.g. 2,1");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("--out", g_out, "output file (default stdout)");

    // bench
    std::string b_dir, b_algos, b_out;
    double b_timeout = 60;
    int b_jobs = 1, b_cap = 12;
    auto* bench = app.add_subcommand("bench", "run solvers over an instance directory");
    bench->add_option("dir", b_dir, "directory of .fcc files")->required();
    bench->add_option("--algos", b_algos, "comma list (default: all)");
    bench->add_option("--timeout", b_timeout, "per-cell wall clock limit in seconds");
    bench->add_option("--jobs", b_jobs, "worker pool size");
    bench->add_option("--oracle-cap", b_cap, "oracle size cap");
    bench->add_option("--out", b_out, "write the table to a file");

    // verify
    std::string v_path, v_report;
    int v_budget = -1;
    auto* verify = app.add_subcommand("verify", "re-check a solution report");
    verify->add_option("instance", v_path, "instance file")->required();
    verify->add_option("--report", v_report, "JSON report produced by solve")->required();
    verify->add_option("--budget", v_budget, "budget to check against");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            fcc::SolveOptions opts;
            if (budget >= 0) opts.budget = budget;
            if (!td_file.empty()) opts.decomposition_file = td_file;
            if (gamma >= 0) opts.gamma = gamma;
            opts.oracle_cap = oracle_cap;
            if (timeout > 0) opts.timeout_s = timeout;
            return cmd_solve(in_path, algo, opts, json_out);
        }
        if (dec->parsed()) return cmd_decompose(d_path, d_kind, d_mode, d_out);
        if (gen->parsed()) return cmd_gen(g_family, g_n, g_p, g_k, g_fairlet, g_seed, g_out);
        if (bench->parsed()) return cmd_bench(b_dir, b_algos, b_timeout, b_jobs, b_cap, b_out);
        if (verify->parsed())
            return cmd_verify(v_path, v_report,
                              v_budget >= 0 ? std::optional<int>(v_budget) : std::nullopt);
    } catch (const fcc::TimeoutError&) {
        std::cerr << "error: wall clock limit exceeded\n";
        return kExitTimeout;
    } catch (const fcc::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: check the solver's preconditions (fairlet size, instance size "
                     "caps) or pick another --algo\n";
        return kExitPrecondition;
    } catch (const fcc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
